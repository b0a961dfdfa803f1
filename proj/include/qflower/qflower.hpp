#pragma once
// qflower.hpp — umbrella include for the whole workbench.

#include "qflower/errors.hpp"
#include "qflower/graph.hpp"
#include "qflower/graph6.hpp"
#include "qflower/search.hpp"
#include "qflower/spectral.hpp"
#include "qflower/subgraph.hpp"
#include "qflower/verify.hpp"
