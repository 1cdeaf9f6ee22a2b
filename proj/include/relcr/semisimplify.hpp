#pragma once

// Iterated degeneration of a tuple to a relatively completely reducible limit.

#include <vector>

#include "relcr/relcr_checker.hpp"

namespace relcr {

template <ExactField F>
struct SemisimplifyStep {
    Destabilizer<F> destabilizer;
    GeneratorTuple<F> before;
    std::size_t before_dim;
    std::size_t after_dim;
};

template <ExactField F>
struct SemisimplifyTrace {
    std::vector<SemisimplifyStep<F>> steps;
    GeneratorTuple<F> final;
    RelCrReport<F> final_report;
};

/// Replace t by c_λ(t) for an explicit destabilizer until the module
/// criterion holds. Each step strictly raises dim C_H, so the loop ends
/// after at most dim Lie(H) steps.
template <ExactField F>
SemisimplifyTrace<F> semisimplify(const GeneratorTuple<F>& t, const HSpec& h,
                                  DestabilizerPreference pref = DestabilizerPreference::ConditionIFirst)
{
    if (!h.glu_coords()) throw UnsupportedHSpec("semisimplify needs H = GL(U)");
    if (h.dim() != t.dim()) throw AmbientMismatch("HSpec and tuple dimensions differ");
    std::vector<SemisimplifyStep<F>> steps;
    auto cur = t;
    auto dim = centralizer_dim(h, cur);
    for (;;) {
        auto rep = check_relcr_module(cur, h);
        if (rep.verdict == Verdict::Inconclusive) throw RadicalUndecided(rep.note);
        if (rep.verdict == Verdict::RelCR) return {std::move(steps), std::move(cur), std::move(rep)};
        if (steps.size() > h.lie_dim()) throw std::logic_error("semisimplify did not terminate");
        auto d = module_destabilizer(cur, h, pref);
        if (!d) throw std::logic_error("module criterion failed without a witness");
        auto next = apply_limit(d->lambda, cur);
        auto next_dim = centralizer_dim(h, next);
        if (next_dim <= dim) throw std::logic_error("centralizer dimension did not increase");
        steps.push_back({std::move(*d), cur, dim, next_dim});
        cur = std::move(next);
        dim = next_dim;
    }
}

/// Replays a trace: every recorded λ contains the then-current tuple in its
/// parabolic, limits chain up to the final tuple, and dims increase.
template <ExactField F>
bool replay_trace(const SemisimplifyTrace<F>& tr, const GeneratorTuple<F>& start, const HSpec& h)
{
    auto cur = start;
    for (const auto& s : tr.steps) {
        if (!(s.before == cur)) return false;
        if (!tuple_in_parabolic(s.destabilizer.lambda, cur)) return false;
        if (s.before_dim != centralizer_dim(h, cur)) return false;
        cur = apply_limit(s.destabilizer.lambda, cur);
        if (s.after_dim != centralizer_dim(h, cur) || s.after_dim <= s.before_dim) return false;
    }
    return cur == tr.final && check_relcr_module(cur, h).verdict == Verdict::RelCR;
}

} // namespace relcr
