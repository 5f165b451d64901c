#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "labelkit/graph.hpp"

namespace labelkit {

using Labeling = std::vector<int>;

// graph6 per the published byte encoding (bit-exact)
std::string toGraph6(const Graph& g);
Graph fromGraph6(std::string_view s);

// edge-list text: line 1 "p q", then q lines "u v" (0-based, LF)
std::string toEdgeListText(const Graph& g);
Graph fromEdgeListText(std::string_view text);

// labeling text: one line "u:label" per node
std::string toLabelingText(const Labeling& phi);
Labeling fromLabelingText(std::string_view text);

}  // namespace labelkit
