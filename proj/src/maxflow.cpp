#include "dipack/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace dipack {

bool MaxFlow::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = head_[v]; e != -1; e = edges_[e].next) {
            if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                level_[edges_[e].to] = level_[v] + 1;
                q.push(edges_[e].to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
        E& ed = edges_[e];
        if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
            long long d = dfs(ed.to, t, std::min(f, ed.cap));
            if (d > 0) {
                ed.cap -= d;
                edges_[e ^ 1].cap += d;
                return d;
            }
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
        iter_ = head_;
        long long f;
        while ((f = dfs(s, t, INF)) > 0) flow += f;
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_side(int s) const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = head_[v]; e != -1; e = edges_[e].next)
            if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                seen[edges_[e].to] = 1;
                stack.push_back(edges_[e].to);
            }
    }
    return seen;
}

}  // namespace dipack
