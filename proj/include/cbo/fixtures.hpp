#pragma once

#include <string>
#include <vector>

#include "cbo/graph.hpp"
#include "cbo/ordering.hpp"

namespace cbo {

struct Fixture {
    Graph graph;
    EdgeOrdering ordering;
};

// Reference cyclic base orderings transcribed as plain edge -> rank tables,
// paired with the matching family generator under its canonical labeling.
// Names: T2, T3, T4, Theta555, Ci9_14, Ci10_14, Ci12_14, Pentagon5.
// Throws std::invalid_argument for an unknown name.
Fixture paper_fixture(const std::string& name);

const std::vector<std::string>& fixture_names();

}  // namespace cbo
