#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dipack {

// Multi-arc digraph with nonnegative integer arc weights. Loops are rejected;
// parallel and opposite arcs are fine. Vertices are dense ids 0..n-1; external
// labels live at the I/O boundary. Arc indices are stable: minors and liftings
// refer to arcs by index.
struct Arc {
    int tail = 0;
    int head = 0;
    long long weight = 1;
};

class WeightedDigraph {
  public:
    WeightedDigraph() = default;
    explicit WeightedDigraph(int n, std::string name = "") : n_(n), name_(std::move(name)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int add_arc(int tail, int head, long long weight = 1) {
        if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (tail == head) throw std::invalid_argument("loop arc rejected");
        if (weight < 0) throw std::invalid_argument("negative arc weight");
        arcs_.push_back({tail, head, weight});
        return static_cast<int>(arcs_.size()) - 1;
    }

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int i) const { return arcs_.at(i); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }
    void set_weight(int i, long long w) {
        if (w < 0) throw std::invalid_argument("negative arc weight");
        arcs_.at(i).weight = w;
    }

    long long weighted_out_degree(int v) const {
        long long s = 0;
        for (const Arc& a : arcs_)
            if (a.tail == v) s += a.weight;
        return s;
    }
    long long weighted_in_degree(int v) const {
        long long s = 0;
        for (const Arc& a : arcs_)
            if (a.head == v) s += a.weight;
        return s;
    }
    long long weighted_degree(int v) const { return weighted_out_degree(v) + weighted_in_degree(v); }
    long long imbalance(int v) const { return weighted_out_degree(v) - weighted_in_degree(v); }

    long long total_weight() const {
        long long s = 0;
        for (const Arc& a : arcs_) s += a.weight;
        return s;
    }

    bool connected_underlying() const;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::string name_;
};

// replicate_weights: every arc of weight w >= 1 becomes w parallel unit arcs,
// weight-0 arcs stay. provenance[i] = original arc index of new arc i.
struct Replication {
    WeightedDigraph digraph;
    std::vector<int> provenance;
    // replicas[j] = indices of new arcs that came from original arc j
    std::vector<std::vector<int>> replicas;
};
Replication replicate_weights(const WeightedDigraph& d);

WeightedDigraph reverse(const WeightedDigraph& d);

// delete the arcs in `del` (indices); keep[i] = new index of old arc i or -1
struct ArcDeletion {
    WeightedDigraph digraph;
    std::vector<int> old_to_new;
};
ArcDeletion delete_arcs(const WeightedDigraph& d, const std::vector<int>& del);

// contract the arcs in `con` (merge endpoints, drop resulting loops).
struct Contraction {
    WeightedDigraph digraph;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> old_to_new;  // old arc -> new arc index or -1 (contracted/loop)
};
Contraction contract_arcs(const WeightedDigraph& d, const std::vector<int>& con);

// identify a vertex set into a single new vertex (arcs inside dropped)
Contraction identify_vertices(const WeightedDigraph& d, const std::vector<char>& in_set);

}  // namespace dipack
