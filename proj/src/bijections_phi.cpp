#include <algorithm>

#include "bijections_util.hpp"
#include "gg/bijections.hpp"

namespace gg {

using detail::require;

StepDecision decide_step(const Partition& lam, int p, int m, const IdentityParams& params) {
    require(in_C_hat(lam, params, p), "decide_step: lambda not in the reduction domain for p=" + std::to_string(p));
    auto split = insertion_split(lam, m);
    require(split.has_value(), "decide_step: no insertion split for m=" + std::to_string(m));
    HatProfile hp = hat_profile(lam, p);
    GGMarking mk = gg_mark(lam);
    StepDecision d;
    d.p1 = split->first;
    d.t1 = split->second;
    d.s = hp.anchors.back();
    d.anchor_value = mk.row(1, d.s);
    const int v = 2 * d.t1 + 1, x = d.anchor_value;
    if (v <= x - 2) {
        d.what = Decision::Insert;
        d.rule = 1;
    } else if (v == x - 1) {
        HatCluster c = hp.labels.front();
        if (c == HatCluster::A1 || c == HatCluster::C) {
            d.what = Decision::Insert;
            d.rule = 2;
        } else {
            d.what = Decision::Reduce;
            d.rule = 3;
        }
    } else if (v > x + 2) {
        d.what = Decision::Reduce;
        d.rule = 4;
    } else {
        throw ContractError("decide_step: 2t'+1=" + std::to_string(v) + " against lambda^{(1)}_s=" + std::to_string(x) +
                            " falls outside the four cases for " + lam.str());
    }
    return d;
}

Partition phi(const Triplet& tr, const IdentityParams& params, std::vector<TraceStep>* trace) {
    require_triplet(tr, params);
    if (!tr.tau.empty() && params.k < 3) throw ParamError("phi: tau must be empty when k = 2");
    if (!tr.eta.empty()) require_companion_params(params);
    std::vector<int> ps, ms;  // consumed from the back
    for (int t : tr.tau) ps.push_back((1 - t) / 2);
    std::sort(ps.begin(), ps.end());
    for (int e : tr.eta) ms.push_back((e - 1) / 2);
    std::sort(ms.rbegin(), ms.rend());

    Partition cur = tr.lambda;
    while (!ps.empty() || !ms.empty()) {
        bool do_insert;
        if (ps.empty()) do_insert = true;
        else if (ms.empty()) do_insert = false;
        else do_insert = decide_step(cur, ps.back(), ms.back(), params).what == Decision::Insert;
        TraceStep st;
        st.weight_before = cur.weight();
        if (do_insert) {
            const int m = ms.back();
            ms.pop_back();
            require(in_C_less_m(cur, params, m), "phi: intermediate not in C^<(|m) for m=" + std::to_string(m));
            st.verified.push_back("C^<(|m)");
            cur = insert(cur, m, params);
            st.verified.push_back("C^=(|m)");
            st.op = "insert";
            st.arg = m;
        } else {
            const int p = ps.back();
            ps.pop_back();
            require(in_C_hat(cur, params, p), "phi: intermediate not in C-hat(|p) for p=" + std::to_string(p));
            st.verified.push_back("C-hat(|p)");
            cur = reduce(cur, p, params);
            st.verified.push_back("C-check(|p)");
            st.op = "reduce";
            st.arg = p;
        }
        require(satisfies_C(cur, params), "phi: intermediate left the class");
        st.verified.push_back("class");
        st.weight_after = cur.weight();
        st.verified.push_back("weight");
        st.result = cur;
        if (trace) trace->push_back(std::move(st));
    }
    require(cur.weight() == tr.weight(), "phi: weight law");
    return cur;
}

Triplet psi(const Partition& pi, const IdentityParams& params, std::vector<TraceStep>* trace) {
    require_class_params(params);
    if (!satisfies_C(pi, params)) throw ParamError("psi: input not in the class");
    Partition cur = pi;
    Triplet out;
    while (cur.largest_odd()) {
        TraceStep st;
        st.weight_before = cur.weight();
        if (insertion_part(cur)) {
            auto [next, m] = separate(cur, params);
            out.eta.push_back(2 * m + 1);
            st.op = "separate";
            st.arg = m;
            st.verified = {"C^=(|m)", "C^<(|m)"};
            cur = next;
        } else {
            const int p = *reduction_part(cur);
            cur = dilate(cur, p, params);
            out.tau.push_back(1 - 2 * p);
            st.op = "dilate";
            st.arg = p;
            st.verified = {"C-check(|p)", "C-hat(|p)"};
        }
        st.weight_after = cur.weight();
        st.result = cur;
        if (trace) trace->push_back(std::move(st));
    }
    out.lambda = cur;
    std::sort(out.tau.rbegin(), out.tau.rend());
    std::sort(out.eta.rbegin(), out.eta.rend());
    try {
        require_triplet(out, params);
    } catch (const ParamError& e) {
        throw ContractError(std::string("psi: result is not a triplet: ") + e.what());
    }
    require(out.weight() == pi.weight(), "psi: weight law");
    return out;
}

}  // namespace gg
