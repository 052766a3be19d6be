#pragma once

#include "qseries/bailey.hpp"

namespace qseries {

/// One catalogued double/triple-series-to-W transform instance: the sequence
/// choices feeding the generic transform, the closed forms for beta and gamma,
/// and exact evaluators for the two sides of the resulting identity.
struct TransformInstance {
    std::string id;
    int arity = 2;
    std::vector<std::string> param_names;
    std::function<TransformChoices(const ParamPoint&)> choices;
    std::function<Rational(const ParamPoint&, long, long, long)> beta_closed;
    /// null when no closed form exists (EQ-3.4; see catalog notes)
    std::function<Rational(const ParamPoint&, long)> gamma_closed;
    std::function<Rational(const ParamPoint&)> lhs;
    std::function<Rational(const ParamPoint&)> rhs;
};

const std::vector<TransformInstance>& transform_instances();
const TransformInstance& transform_instance(const std::string& id);

/// A closed form for the fourth instance's gamma that looks plausible but does
/// NOT equal the direct double sum; kept as a negative control for tests.
Rational eq34_gamma_rejected(const ParamPoint& pt, long m);

} // namespace qseries
