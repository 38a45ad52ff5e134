#pragma once

#include "rigaug/graph.hpp"

namespace rigaug {
namespace fixtures {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

Graph k4();      // K4 on {0,1,2,3}
Graph k4e();     // K4 minus {2,3}
Graph c4();      // cycle 0-1-2-3
Graph p3();      // path 0-1-2
Graph w4();      // wheel: hub 4, rim cycle 0-1-2-3
Graph k5();      // K5 on {0..4}
Graph k5e();     // K5 minus {3,4}
Graph twok4();   // K4 on {0,1,2,3} ∪ K4 on {2,3,4,5}
Graph trik4();   // three K4s pairwise sharing only edge {0,1}
Graph prism();   // triangles {0,1,2},{3,4,5} + matching 03,14,25

} // namespace fixtures
} // namespace rigaug
