#include "rigaug/pebble.hpp"

#include <algorithm>

namespace rigaug {

PebbleGame::PebbleGame(int n)
    : peb_(n, 2), out_(n, {-1, -1}), seen_(n, 0), par_(n, -1) {}

// DFS along the orientation from root; a pebble found at any vertex other
// than a or b is walked back to root by reversing the path.
bool PebbleGame::find_pebble(int root, int a, int b) {
    ++stamp_;
    std::vector<int> stack{root};
    seen_[root] = stamp_;
    par_[root] = -1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x != root && x != a && x != b && peb_[x] > 0) {
            --peb_[x];
            ++peb_[root];
            // Reverse the tree path root -> x arc by arc. Each vertex frees
            // its slot before the next iteration needs it; x itself has a
            // free slot because it held a pebble.
            for (int cur = x; par_[cur] != -1; cur = par_[cur]) {
                int p = par_[cur];
                *std::find(out_[p].begin(), out_[p].end(), cur) = -1;
                *std::find(out_[cur].begin(), out_[cur].end(), -1) = p;
            }
            return true;
        }
        for (int y : out_[x]) {
            if (y < 0 || seen_[y] == stamp_) continue;
            seen_[y] = stamp_;
            par_[y] = x;
            stack.push_back(y);
        }
    }
    return false;
}

int PebbleGame::gather(int u, int v) {
    while (peb_[u] + peb_[v] < 4) {
        if (peb_[u] < 2 && find_pebble(u, u, v)) continue;
        if (peb_[v] < 2 && find_pebble(v, u, v)) continue;
        break;
    }
    return peb_[u] + peb_[v];
}

bool PebbleGame::can_accept(Edge e) { return gather(e.u, e.v) == 4; }

bool PebbleGame::try_insert(Edge e) {
    if (e.v >= n()) throw InvalidPair("edge endpoint out of range");
    if (gather(e.u, e.v) < 4) return false;
    --peb_[e.u];
    *std::find(out_[e.u].begin(), out_[e.u].end(), -1) = e.v;
    accepted_.insert(std::upper_bound(accepted_.begin(), accepted_.end(), e), e);
    return true;
}

void PebbleGame::insert_all(const EdgeSet& es) {
    for (const Edge& e : es) try_insert(e);
}

} // namespace rigaug
