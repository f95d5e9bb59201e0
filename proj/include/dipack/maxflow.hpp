#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace dipack {

// Dinic max-flow on small networks.
class MaxFlow {
  public:
    static constexpr long long INF = std::numeric_limits<long long>::max() / 4;

    explicit MaxFlow(int n) : n_(n), head_(n, -1) {}

    int add_edge(int u, int v, long long cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(edges_.size()) - 1;
        return static_cast<int>(edges_.size()) - 2;
    }

    long long run(int s, int t);

    long long flow_on(int e) const { return edges_[e ^ 1].cap; }

    // vertices reachable from s in the residual network (after run)
    std::vector<char> min_cut_side(int s) const;

  private:
    struct E {
        int to;
        int next;
        long long cap;
    };
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long f);

    int n_;
    std::vector<int> head_;
    std::vector<E> edges_;
    std::vector<int> level_, iter_;
};

}  // namespace dipack
