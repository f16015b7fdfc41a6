#pragma once

#include <string>
#include <vector>

#include "smw/graph.hpp"

namespace smw::corpus {

Graph p4();   // 0-1-2-3
Graph c4();
Graph c5();
Graph k4();
Graph k13();  // star, center 0
Graph tt();   // triangles {0,1,2}, {3,4,5} joined by 2-3
Graph k2();

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);

/// Name lookup for "P4", "C5", "K13", ...; throws DomainError on unknown names.
Graph by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace smw::corpus
