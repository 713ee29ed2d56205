#include "vcw/matching.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace vcw {

namespace {

// Edmonds' algorithm in the compact base[] formulation: grow alternating
// trees breadth-first, contract blossoms on odd cycles, flip the matching
// along augmenting paths.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          mate_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0),
          in_queue_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0),
          on_path_(static_cast<std::size_t>(n_), 0) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[static_cast<std::size_t>(v)] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (mate_[static_cast<std::size_t>(w)] == -1) {
                    mate_[static_cast<std::size_t>(v)] = w;
                    mate_[static_cast<std::size_t>(w)] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (mate_[static_cast<std::size_t>(v)] == -1) augment_from(v);
        return mate_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::fill(on_path_.begin(), on_path_.end(), 0);
        while (true) {
            a = base_[static_cast<std::size_t>(a)];
            on_path_[static_cast<std::size_t>(a)] = 1;
            int ma = mate_[static_cast<std::size_t>(a)];
            if (ma == -1) break;
            a = parent_[static_cast<std::size_t>(ma)];
        }
        while (true) {
            b = base_[static_cast<std::size_t>(b)];
            if (on_path_[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int stop_base, int child) {
        while (base_[static_cast<std::size_t>(v)] != stop_base) {
            int mv = mate_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void contract(int v, int w, std::queue<int>& q) {
        int cur = lowest_common_base(v, w);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, cur, w);
        mark_path(w, cur, v);
        for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) continue;
            base_[static_cast<std::size_t>(i)] = cur;
            if (!in_queue_[static_cast<std::size_t>(i)]) {
                in_queue_[static_cast<std::size_t>(i)] = 1;
                q.push(i);
            }
        }
    }

    bool augment_from(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;

        std::queue<int> q;
        q.push(root);
        in_queue_[static_cast<std::size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(w)] ||
                    mate_[static_cast<std::size_t>(v)] == w)
                    continue;
                if (w == root || (mate_[static_cast<std::size_t>(w)] != -1 &&
                                  parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(w)])] != -1)) {
                    contract(v, w, q);
                } else if (parent_[static_cast<std::size_t>(w)] == -1) {
                    parent_[static_cast<std::size_t>(w)] = v;
                    int mw = mate_[static_cast<std::size_t>(w)];
                    if (mw == -1) {
                        flip(w);
                        return true;
                    }
                    if (!in_queue_[static_cast<std::size_t>(mw)]) {
                        in_queue_[static_cast<std::size_t>(mw)] = 1;
                        q.push(mw);
                    }
                }
            }
        }
        return false;
    }

    void flip(int leaf) {
        int cur = leaf;
        while (cur != -1) {
            int prev = parent_[static_cast<std::size_t>(cur)];
            int next = prev == -1 ? -1 : mate_[static_cast<std::size_t>(prev)];
            mate_[static_cast<std::size_t>(cur)] = prev;
            if (prev != -1) mate_[static_cast<std::size_t>(prev)] = cur;
            cur = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> in_queue_;
    std::vector<char> in_blossom_;
    std::vector<char> on_path_;
};

} // namespace

std::vector<int> max_matching_mates(const Graph& g) { return Blossom(g).run(); }

Factor max_matching(const Graph& g) {
    std::vector<int> mate = max_matching_mates(g);
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = mate[static_cast<std::size_t>(v)];
        if (w > v) ids.push_back(g.edge_index(v, w));
    }
    return Factor(g, std::move(ids));
}

} // namespace vcw
