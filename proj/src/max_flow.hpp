#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace hyperkirch::detail {

/// Dinic's algorithm with 64-bit capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t n) : adj_(n), level_(n), next_(n) {}

    void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
        adj_[from].push_back(arcs_.size());
        arcs_.push_back({to, cap});
        adj_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    std::int64_t run(std::size_t source, std::size_t sink) {
        std::int64_t total = 0;
        while (levels(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

private:
    struct Arc {
        std::size_t to;
        std::int64_t cap;
    };

    bool levels(std::size_t source, std::size_t sink) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[source] = 0;
        std::queue<std::size_t> q;
        q.push(source);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t a : adj_[v])
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[sink] >= 0;
    }

    std::int64_t push(std::size_t v, std::size_t sink, std::int64_t limit) {
        if (v == sink) return limit;
        for (; next_[v] < adj_[v].size(); ++next_[v]) {
            const std::size_t a = adj_[v][next_[v]];
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
            if (std::int64_t got = push(arc.to, sink, std::min(limit, arc.cap))) {
                arc.cap -= got;
                arcs_[a ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace hyperkirch::detail
