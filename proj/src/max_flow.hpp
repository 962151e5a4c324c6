#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace ectarget::detail {

// Dinic max-flow. Arcs are explored in insertion order, so results are
// deterministic for a fixed construction order.
class MaxFlow {
public:
    using Cap = std::int64_t;
    static constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), next_arc_(nodes) {}

    // Returns the arc id; arc_id ^ 1 is its residual twin.
    int add_arc(int from, int to, Cap cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    Cap run(int source, int sink) {
        Cap total = 0;
        while (bfs(source, sink)) {
            for (std::size_t v = 0; v < head_.size(); ++v) next_arc_[v] = head_[v];
            while (Cap pushed = dfs(source, sink, kInfinite)) total += pushed;
        }
        return total;
    }

    Cap flow(int arc) const { return arcs_[arc ^ 1].cap; }

    // Nodes reachable from source in the residual network (valid after run).
    std::vector<char> source_side(int source) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        Cap cap;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    queue.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    Cap dfs(int v, int sink, Cap limit) {
        if (v == sink) return limit;
        for (int& a = next_arc_[v]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
            Cap pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
            if (pushed > 0) {
                arc.cap -= pushed;
                arcs_[a ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> next_arc_;
};

}  // namespace ectarget::detail
