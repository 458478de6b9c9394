// Copyright 2026 LSSC Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lssc/blossom.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace lssc {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Primal-dual blossom with a single alternating tree. Duals follow the
// crossing convention: every node (vertex or pseudonode) carries y, the
// slack of an edge between different surface nodes is
// 2w - eff(u) - eff(v), eff(v) = y_v + sum of y over enclosing blossoms.
// Dual updates add +delta to outer surface nodes and -delta to inner ones,
// which leaves shrunk interiors tight and expands an inner blossom exactly
// when its dual reaches zero. Blossom children alternate so that cycle
// edges at odd positions are matched and child 0 holds the base.
struct Solver {
    int n = 0;
    std::vector<int> eu, ev;
    std::vector<int64_t> w2;
    std::vector<int> adj_off, adj_edge;

    std::vector<int64_t> y;
    std::vector<int> parent;
    std::vector<int8_t> label;  // 0 free, 1 outer, 2 inner
    std::vector<int> tpe;       // tree parent edge per surface node
    std::vector<int> match;     // matched edge per surface node
    std::vector<char> in_use;
    std::vector<char> in_tree;
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> cyc_edge;
    std::vector<std::vector<int>> verts;

    std::vector<int64_t> eff;
    std::vector<int> vmatch;
    std::vector<int> free_ids;
    std::vector<int> tree_nodes;
    int64_t delta_sum = 0;

    using Event = std::pair<int64_t, int>;
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> q_grow, q_shrink, q_expand;

    Solver(int n_vertices, const std::vector<WeightedEdge> &edges) : n(n_vertices) {
        for (const auto &e : edges) {
            if (e[2] < 0) {
                throw std::invalid_argument("blossom: negative edge weight");
            }
            if (e[0] == e[1]) {
                throw std::invalid_argument("blossom: self loop");
            }
            eu.push_back((int)e[0]);
            ev.push_back((int)e[1]);
            w2.push_back(2 * e[2]);
        }
        adj_off.assign((size_t)n + 1, 0);
        for (size_t i = 0; i < eu.size(); i++) {
            adj_off[(size_t)eu[i] + 1]++;
            adj_off[(size_t)ev[i] + 1]++;
        }
        for (int i = 0; i < n; i++) {
            adj_off[(size_t)i + 1] += adj_off[(size_t)i];
        }
        adj_edge.resize(eu.size() * 2);
        std::vector<int> cur(adj_off.begin(), adj_off.end() - 1);
        for (size_t i = 0; i < eu.size(); i++) {
            adj_edge[(size_t)cur[eu[i]]++] = (int)i;
            adj_edge[(size_t)cur[ev[i]]++] = (int)i;
        }
        size_t cap = (size_t)(2 * n + 2);
        y.assign(cap, 0);
        parent.assign(cap, -1);
        label.assign(cap, 0);
        tpe.assign(cap, -1);
        match.assign(cap, -1);
        in_use.assign(cap, 0);
        in_tree.assign(cap, 0);
        children.resize(cap);
        cyc_edge.resize(cap);
        verts.resize(cap);
        for (int v = 0; v < n; v++) {
            in_use[(size_t)v] = 1;
        }
        eff.assign((size_t)n, 0);
        vmatch.assign((size_t)n, -1);
    }

    int other(int e, int x) const {
        return eu[(size_t)e] == x ? ev[(size_t)e] : eu[(size_t)e];
    }
    int surface(int x) const {
        while (parent[(size_t)x] >= 0) {
            x = parent[(size_t)x];
        }
        return x;
    }
    int64_t slack(int e) const {
        return w2[(size_t)e] - eff[(size_t)eu[(size_t)e]] - eff[(size_t)ev[(size_t)e]];
    }
    bool contains_vertex(int node, int v) const {
        for (int x = v; x >= 0; x = parent[(size_t)x]) {
            if (x == node) {
                return true;
            }
        }
        return false;
    }
    int endpoint_inside(int e, int node) const {
        return contains_vertex(node, eu[(size_t)e]) ? eu[(size_t)e] : ev[(size_t)e];
    }
    int endpoint_outside(int e, int node) const {
        return contains_vertex(node, eu[(size_t)e]) ? ev[(size_t)e] : eu[(size_t)e];
    }
    void vertices_inside(int x, std::vector<int> *out) const {
        if (x < n) {
            out->push_back(x);
        } else {
            out->insert(out->end(), verts[(size_t)x].begin(), verts[(size_t)x].end());
        }
    }

    int alloc_blossom() {
        int b;
        if (!free_ids.empty()) {
            b = free_ids.back();
            free_ids.pop_back();
        } else {
            b = (int)y.size();
            y.push_back(0);
            parent.push_back(-1);
            label.push_back(0);
            tpe.push_back(-1);
            match.push_back(-1);
            in_use.push_back(0);
            in_tree.push_back(0);
            children.emplace_back();
            cyc_edge.emplace_back();
            verts.emplace_back();
        }
        y[(size_t)b] = 0;
        parent[(size_t)b] = -1;
        label[(size_t)b] = 0;
        tpe[(size_t)b] = -1;
        match[(size_t)b] = -1;
        in_use[(size_t)b] = 1;
        in_tree[(size_t)b] = 0;
        children[(size_t)b].clear();
        cyc_edge[(size_t)b].clear();
        verts[(size_t)b].clear();
        return b;
    }

    // ---- internal matching rotation ----

    // Makes x (a real vertex inside node) the base, flipping the internal
    // matching along the even alternating path from x's child to child 0.
    void rotate_base(int node, int x) {
        if (node < n) {
            return;
        }
        auto &ch = children[(size_t)node];
        auto &ce = cyc_edge[(size_t)node];
        int k = (int)ch.size();
        int i = 0;
        while (i < k && !contains_vertex(ch[(size_t)i], x)) {
            i++;
        }
        if (i == k) {
            throw std::logic_error("rotate_base: vertex not inside blossom");
        }
        if (i > 0) {
            if (i % 2 == 0) {
                // Downward path i, i-1, ..., 0: new matched pairs at
                // ce[i-2], ce[i-4], ..., ce[0].
                for (int j = i - 1; j >= 1; j -= 2) {
                    set_inner_match(ch[(size_t)j], ch[(size_t)(j - 1)], ce[(size_t)(j - 1)]);
                }
            } else {
                // Upward path i, i+1, ..., k-1, 0: new matched pairs at
                // ce[i+1], ce[i+3], ..., ce[k-1].
                for (int j = i + 1; j <= k - 1; j += 2) {
                    set_inner_match(ch[(size_t)j], ch[(size_t)((j + 1) % k)], ce[(size_t)j]);
                }
            }
            std::rotate(ch.begin(), ch.begin() + i, ch.end());
            std::rotate(ce.begin(), ce.begin() + i, ce.end());
        }
        rotate_base(ch[0], x);
    }

    void set_inner_match(int ca, int cb, int e) {
        int a_end = contains_vertex(ca, eu[(size_t)e]) ? eu[(size_t)e] : ev[(size_t)e];
        int b_end = other(e, a_end);
        vmatch[(size_t)a_end] = e;
        vmatch[(size_t)b_end] = e;
        rotate_base(ca, a_end);
        rotate_base(cb, b_end);
    }

    void set_surface_match(int node, int e) {
        int x = endpoint_inside(e, node);
        rotate_base(node, x);
        match[(size_t)node] = e;
        vmatch[(size_t)x] = e;
    }

    // ---- tree machinery ----

    void push_tree_node(int x) {
        if (!in_tree[(size_t)x]) {
            in_tree[(size_t)x] = 1;
            tree_nodes.push_back(x);
        }
    }

    bool is_active_surface(int x) const {
        return in_use[(size_t)x] && parent[(size_t)x] < 0 && label[(size_t)x] != 0;
    }

    void scan_vertex(int u) {
        int su = surface(u);
        for (int idx = adj_off[(size_t)u]; idx < adj_off[(size_t)u + 1]; idx++) {
            int e = adj_edge[(size_t)idx];
            int sv = surface(other(e, u));
            if (sv == su) {
                continue;
            }
            if (label[(size_t)sv] == 1) {
                q_shrink.push({delta_sum + slack(e) / 2, e});
            } else if (label[(size_t)sv] == 0) {
                q_grow.push({delta_sum + slack(e), e});
            }
        }
    }

    void scan_node(int x) {
        std::vector<int> vs;
        vertices_inside(x, &vs);
        for (int v : vs) {
            scan_vertex(v);
        }
    }

    void make_outer(int x, int parent_edge) {
        label[(size_t)x] = 1;
        tpe[(size_t)x] = parent_edge;
        push_tree_node(x);
        scan_node(x);
    }

    void make_inner(int x, int parent_edge) {
        label[(size_t)x] = 2;
        tpe[(size_t)x] = parent_edge;
        push_tree_node(x);
        if (x >= n) {
            q_expand.push({delta_sum + y[(size_t)x], x});
        }
    }

    void apply_delta(int64_t d) {
        delta_sum += d;
        std::vector<int> vs;
        for (int x : tree_nodes) {
            if (!is_active_surface(x)) {
                continue;
            }
            int64_t s = label[(size_t)x] == 1 ? d : -d;
            y[(size_t)x] += s;
            vs.clear();
            vertices_inside(x, &vs);
            for (int v : vs) {
                eff[(size_t)v] += s;
            }
        }
    }

    void shrink(int e) {
        if (slack(e) != 0) {
            throw std::logic_error("shrink on a non-tight edge");
        }
        int su = surface(eu[(size_t)e]);
        int sv = surface(ev[(size_t)e]);
        // Paths from both endpoints to their least common ancestor.
        std::set<int> seen;
        for (int x = su;; x = surface(endpoint_outside(tpe[(size_t)x], x))) {
            seen.insert(x);
            if (tpe[(size_t)x] < 0) {
                break;
            }
        }
        int lca = sv;
        while (!seen.count(lca)) {
            lca = surface(endpoint_outside(tpe[(size_t)lca], lca));
        }
        std::vector<int> path_u, path_v;
        for (int x = su; x != lca; x = surface(endpoint_outside(tpe[(size_t)x], x))) {
            path_u.push_back(x);
        }
        for (int x = sv; x != lca; x = surface(endpoint_outside(tpe[(size_t)x], x))) {
            path_v.push_back(x);
        }

        int b = alloc_blossom();
        auto &ch = children[(size_t)b];
        auto &ce = cyc_edge[(size_t)b];
        ch.push_back(lca);
        for (size_t i = path_u.size(); i-- > 0;) {
            ch.push_back(path_u[i]);
        }
        for (int x : path_v) {
            ch.push_back(x);
        }
        // ce[i] joins ch[i] and ch[i+1 mod k].
        size_t len_u = path_u.size();
        for (size_t i = 0; i + 1 < ch.size(); i++) {
            if (i < len_u) {
                ce.push_back(tpe[(size_t)ch[i + 1]]);
            } else if (i == len_u) {
                ce.push_back(e);
            } else {
                ce.push_back(tpe[(size_t)ch[i]]);
            }
        }
        ce.push_back(path_v.empty() ? e : tpe[(size_t)ch.back()]);

        match[(size_t)b] = match[(size_t)lca];
        tpe[(size_t)b] = tpe[(size_t)lca];
        label[(size_t)b] = 1;
        for (int c : ch) {
            parent[(size_t)c] = b;
            vertices_inside(c, &verts[(size_t)b]);
        }
        push_tree_node(b);
        // Former inner children now live on an outer surface.
        for (int c : ch) {
            if (label[(size_t)c] == 2) {
                scan_node(c);
            }
        }
    }

    void expand(int b) {
        if (y[(size_t)b] != 0) {
            throw std::logic_error("expand with positive dual");
        }
        std::vector<int> ch = children[(size_t)b];
        std::vector<int> ce = cyc_edge[(size_t)b];
        int k = (int)ch.size();
        for (int c : ch) {
            parent[(size_t)c] = -1;
            label[(size_t)c] = 0;
            tpe[(size_t)c] = -1;
        }
        for (int i = 1; i + 1 < k; i += 2) {
            match[(size_t)ch[(size_t)i]] = ce[(size_t)i];
            match[(size_t)ch[(size_t)(i + 1)]] = ce[(size_t)i];
        }
        match[(size_t)ch[0]] = match[(size_t)b];

        int pe = tpe[(size_t)b];
        int entry = endpoint_inside(pe, b);
        int i = 0;
        while (i < k && !contains_vertex(ch[(size_t)i], entry)) {
            i++;
        }
        // Relabel the even path entry-child -> base-child as T, S, ..., T.
        std::vector<int> order;
        std::vector<int> up_edges;  // edge above each path node
        order.push_back(i);
        up_edges.push_back(pe);
        if (i % 2 == 0) {
            for (int j = i; j >= 1; j--) {
                order.push_back(j - 1);
                up_edges.push_back(ce[(size_t)(j - 1)]);
            }
        } else {
            for (int j = i; j < k; j++) {
                order.push_back((j + 1) % k);
                up_edges.push_back(ce[(size_t)j]);
            }
        }
        for (size_t step = 0; step < order.size(); step++) {
            int c = ch[(size_t)order[step]];
            if (step % 2 == 0) {
                make_inner(c, up_edges[step]);
            } else {
                label[(size_t)c] = 1;
                tpe[(size_t)c] = up_edges[step];
                push_tree_node(c);
                scan_node(c);
            }
        }
        in_use[(size_t)b] = 0;
        free_ids.push_back(b);
    }

    void augment(int outer_node, int free_node, int e) {
        if (slack(e) != 0) {
            throw std::logic_error("augment on a non-tight edge");
        }
        set_surface_match(free_node, e);
        int x = outer_node;
        int down_edge = e;
        while (true) {
            int old = match[(size_t)x];
            set_surface_match(x, down_edge);
            if (old < 0) {
                break;
            }
            int t_node = surface(endpoint_outside(old, x));
            int up = tpe[(size_t)t_node];
            set_surface_match(t_node, up);
            down_edge = up;
            x = surface(endpoint_outside(up, t_node));
        }
    }

    void dissolve_tree() {
        for (int x : tree_nodes) {
            in_tree[(size_t)x] = 0;
            if (in_use[(size_t)x] && parent[(size_t)x] < 0) {
                label[(size_t)x] = 0;
                tpe[(size_t)x] = -1;
            }
        }
        tree_nodes.clear();
        q_grow = {};
        q_shrink = {};
        q_expand = {};
    }

    bool run_phase(int root) {
        delta_sum = 0;
        make_outer(root, -1);
        while (true) {
            int64_t d_grow = kInf, d_shrink = kInf, d_expand = kInf;
            while (!q_grow.empty()) {
                auto [key, e] = q_grow.top();
                int su = surface(eu[(size_t)e]), sv = surface(ev[(size_t)e]);
                bool su_out = label[(size_t)su] == 1, sv_out = label[(size_t)sv] == 1;
                if (su == sv || (!su_out && !sv_out)) {
                    q_grow.pop();
                    continue;
                }
                if (su_out && sv_out) {
                    q_grow.pop();
                    q_shrink.push({delta_sum + slack(e) / 2, e});
                    continue;
                }
                if (label[(size_t)(su_out ? sv : su)] != 0) {
                    q_grow.pop();
                    continue;
                }
                int64_t fire = delta_sum + slack(e);
                if (key != fire) {
                    q_grow.pop();
                    q_grow.push({fire, e});
                    continue;
                }
                d_grow = fire;
                break;
            }
            while (!q_shrink.empty()) {
                auto [key, e] = q_shrink.top();
                int su = surface(eu[(size_t)e]), sv = surface(ev[(size_t)e]);
                if (su == sv || label[(size_t)su] != 1 || label[(size_t)sv] != 1) {
                    q_shrink.pop();
                    continue;
                }
                int64_t fire = delta_sum + slack(e) / 2;
                if (key != fire) {
                    q_shrink.pop();
                    q_shrink.push({fire, e});
                    continue;
                }
                d_shrink = fire;
                break;
            }
            while (!q_expand.empty()) {
                auto [key, b] = q_expand.top();
                if (!in_use[(size_t)b] || parent[(size_t)b] >= 0 || label[(size_t)b] != 2) {
                    q_expand.pop();
                    continue;
                }
                int64_t fire = delta_sum + y[(size_t)b];
                if (key != fire) {
                    q_expand.pop();
                    q_expand.push({fire, b});
                    continue;
                }
                d_expand = fire;
                break;
            }

            int64_t fire = std::min({d_grow, d_shrink, d_expand});
            if (fire >= kInf) {
                return false;
            }
            if (fire > delta_sum) {
                apply_delta(fire - delta_sum);
            }

            if (d_grow == fire) {
                auto [key, e] = q_grow.top();
                q_grow.pop();
                int su = surface(eu[(size_t)e]), sv = surface(ev[(size_t)e]);
                int s_out = label[(size_t)su] == 1 ? su : sv;
                int s_free = s_out == su ? sv : su;
                if (match[(size_t)s_free] < 0) {
                    augment(s_out, s_free, e);
                    dissolve_tree();
                    return true;
                }
                make_inner(s_free, e);
                int mate_edge = match[(size_t)s_free];
                make_outer(surface(endpoint_outside(mate_edge, s_free)), mate_edge);
            } else if (d_shrink == fire) {
                auto [key, e] = q_shrink.top();
                q_shrink.pop();
                shrink(e);
            } else {
                auto [key, b] = q_expand.top();
                q_expand.pop();
                expand(b);
            }
        }
    }

    bool solve() {
        if (n % 2) {
            return false;
        }
        for (int v = 0; v < n; v++) {
            int64_t best = kInf;
            for (int idx = adj_off[(size_t)v]; idx < adj_off[(size_t)v + 1]; idx++) {
                best = std::min(best, w2[(size_t)adj_edge[(size_t)idx]]);
            }
            eff[(size_t)v] = best >= kInf ? 0 : best / 2;
            y[(size_t)v] = eff[(size_t)v];
        }
        for (size_t e = 0; e < eu.size(); e++) {
            if (vmatch[(size_t)eu[e]] < 0 && vmatch[(size_t)ev[e]] < 0 && slack((int)e) == 0) {
                vmatch[(size_t)eu[e]] = (int)e;
                vmatch[(size_t)ev[e]] = (int)e;
                match[(size_t)eu[e]] = (int)e;
                match[(size_t)ev[e]] = (int)e;
            }
        }
        for (int v = 0; v < n; v++) {
            int s = surface(v);
            if (match[(size_t)s] < 0) {
                if (!run_phase(s)) {
                    return false;
                }
            }
        }
        return true;
    }

    MatchingResult extract() {
        MatchingResult r;
        r.feasible = true;
        r.mate.assign((size_t)n, -1);
        r.mate_edge.assign((size_t)n, -1);
        for (int v = 0; v < n; v++) {
            int e = vmatch[(size_t)v];
            if (e < 0) {
                r.feasible = false;
                return r;
            }
            r.mate[(size_t)v] = other(e, v);
            r.mate_edge[(size_t)v] = e;
        }
        for (int v = 0; v < n; v++) {
            if (r.mate[(size_t)v] > v) {
                r.weight += w2[(size_t)r.mate_edge[(size_t)v]] / 2;
            }
        }
        r.dual2.assign(y.begin(), y.begin() + n);
        for (int b = n; b < (int)y.size(); b++) {
            if (in_use[(size_t)b] && y[(size_t)b] != 0) {
                std::vector<int> members = verts[(size_t)b];
                std::sort(members.begin(), members.end());
                r.blossoms2.push_back({y[(size_t)b], std::move(members)});
            }
        }
        return r;
    }
};

}  // namespace

MatchingResult min_weight_perfect_matching(int n, const std::vector<WeightedEdge> &edges) {
    Solver s(n, edges);
    if (!s.solve()) {
        MatchingResult r;
        r.feasible = false;
        return r;
    }
    return s.extract();
}

bool verify_matching_certificate(int n, const std::vector<WeightedEdge> &edges, const MatchingResult &result) {
    if (!result.feasible || (int)result.mate.size() != n) {
        return false;
    }
    std::vector<int64_t> eff(result.dual2.begin(), result.dual2.end());
    std::vector<std::vector<int>> blossom_of((size_t)n);
    for (size_t b = 0; b < result.blossoms2.size(); b++) {
        if (result.blossoms2[b].first < 0) {
            return false;
        }
        for (int v : result.blossoms2[b].second) {
            eff[(size_t)v] += result.blossoms2[b].first;
            blossom_of[(size_t)v].push_back((int)b);
        }
    }
    auto common_dual = [&](int u, int v) {
        int64_t c = 0;
        for (int bu : blossom_of[(size_t)u]) {
            for (int bv : blossom_of[(size_t)v]) {
                if (bu == bv) {
                    c += result.blossoms2[(size_t)bu].first;
                }
            }
        }
        return c;
    };
    for (const auto &e : edges) {
        int u = (int)e[0], v = (int)e[1];
        int64_t slack = 2 * e[2] - eff[(size_t)u] - eff[(size_t)v] + 2 * common_dual(u, v);
        if (slack < 0) {
            return false;
        }
    }
    int64_t dual_obj2 = 0;
    for (int v = 0; v < n; v++) {
        dual_obj2 += result.dual2[(size_t)v];
    }
    for (const auto &[z, members] : result.blossoms2) {
        dual_obj2 += z;
        int inside = 0;
        for (int v : members) {
            if (std::binary_search(members.begin(), members.end(), result.mate[(size_t)v])) {
                inside++;
            }
        }
        if (inside != (int)members.size() - 1) {
            return false;
        }
    }
    int64_t matched_w2 = 0;
    for (int v = 0; v < n; v++) {
        int u = result.mate[(size_t)v];
        if (u < 0 || u >= n || result.mate[(size_t)u] != v) {
            return false;
        }
        if (u > v) {
            const auto &e = edges[(size_t)result.mate_edge[(size_t)v]];
            if (!((int)e[0] == v && (int)e[1] == u) && !((int)e[0] == u && (int)e[1] == v)) {
                return false;
            }
            int64_t slack = 2 * e[2] - eff[(size_t)u] - eff[(size_t)v] + 2 * common_dual(u, v);
            if (slack != 0) {
                return false;
            }
            matched_w2 += 2 * e[2];
        }
    }
    return matched_w2 == dual_obj2;
}

}  // namespace lssc
