// gensmall — emit one representative per isomorphism class of simple graphs
// of order n (n <= 8) as graph6 lines, sorted by canonical code.
//
// Level-wise generation: every graph on m+1 vertices arises from a graph on
// m vertices by attaching one new vertex, so extending each canonical
// m-vertex graph by all 2^m neighborhoods and deduplicating by canonical
// form covers every class. Canonical form: minimum over vertex orderings of
// the column-packed upper-triangle bitstring, computed by prefix-pruned
// backtracking. Class counts per order are asserted against the known
// sequence 1, 2, 4, 11, 34, 156, 1044, 12346.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <unordered_set>
#include <vector>

#include "qflower/graph.hpp"
#include "qflower/graph6.hpp"

namespace {

constexpr int max_n = 8;  // C(8,2) = 28 code bits, fits in uint32_t
const std::uint64_t expected_counts[max_n + 1] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

struct AdjMatrix {
    int n = 0;
    bool a[max_n][max_n] = {};
};

// Code bit layout matches graph6 body order: for j = 1..n-1, bits (i, j)
// with i < j, most significant first.
AdjMatrix decode(int n, std::uint32_t code) {
    AdjMatrix m;
    m.n = n;
    int total = n * (n - 1) / 2;
    int bit = total - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1u) m.a[i][j] = m.a[j][i] = true;
    return m;
}

struct Canonizer {
    const AdjMatrix* m = nullptr;
    int n = 0, total_bits = 0;
    std::uint32_t best = 0;
    std::vector<int> perm;
    std::vector<bool> used;

    // filled = bits decided so far; code = their value. A branch survives
    // only while code matches or beats the best-so-far prefix.
    void rec(int pos, int filled, std::uint32_t code) {
        if (pos == n) {
            if (code < best) best = code;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            std::uint32_t word = 0;
            for (int i = 0; i < pos; ++i)
                word = (word << 1) | (m->a[perm[static_cast<std::size_t>(i)]][v] ? 1u : 0u);
            std::uint32_t next_code = (code << pos) | word;
            int next_filled = filled + pos;
            if (next_code > (best >> (total_bits - next_filled))) continue;
            used[static_cast<std::size_t>(v)] = true;
            perm[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, next_filled, next_code);
            used[static_cast<std::size_t>(v)] = false;
        }
    }

    std::uint32_t run(const AdjMatrix& matrix) {
        m = &matrix;
        n = matrix.n;
        total_bits = n * (n - 1) / 2;
        best = total_bits ? ((std::uint32_t(1) << total_bits) - 1) : 0;
        perm.assign(static_cast<std::size_t>(n), 0);
        used.assign(static_cast<std::size_t>(n), false);
        rec(0, 0, 0);
        return best;
    }
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: gensmall N   (1 <= N <= %d; graph6 lines to stdout)\n", max_n);
        return 2;
    }
    int target = std::atoi(argv[1]);
    if (target < 1 || target > max_n) {
        std::fprintf(stderr, "N must be between 1 and %d\n", max_n);
        return 2;
    }

    std::vector<std::uint32_t> level{0};  // K_1
    Canonizer canon;
    for (int n = 1; n < target; ++n) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t code : level) {
            AdjMatrix base = decode(n, code);
            for (std::uint32_t nbrs = 0; nbrs < (std::uint32_t(1) << n); ++nbrs) {
                AdjMatrix ext = base;
                ext.n = n + 1;
                for (int v = 0; v < n; ++v)
                    if ((nbrs >> v) & 1u) ext.a[v][n] = ext.a[n][v] = true;
                next.insert(canon.run(ext));
            }
        }
        level.assign(next.begin(), next.end());
        if (level.size() != expected_counts[n + 1]) {
            std::fprintf(stderr, "internal error: %zu classes at order %d, expected %llu\n", level.size(), n + 1,
                         static_cast<unsigned long long>(expected_counts[n + 1]));
            return 1;
        }
    }

    std::sort(level.begin(), level.end());
    for (std::uint32_t code : level) {
        AdjMatrix m = decode(target, code);
        qflower::GraphBuilder b(target);
        for (int i = 0; i < target; ++i)
            for (int j = i + 1; j < target; ++j)
                if (m.a[i][j]) b.add_edge(i, j);
        std::printf("%s\n", qflower::to_graph6(b.build()).c_str());
    }
    return 0;
}
