#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qseries/hypergeom.hpp"

namespace qseries {

/// A concrete evaluation point for engine A: named monomial parameter values,
/// termination integers and the rational q. Immutable after construction.
struct ParamPoint {
    std::map<std::string, QMonomial> params;
    long M = 0, N = 0, L = 0, K = 0;
    Rational qv;

    Rational value(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end()) throw QSeriesError("missing parameter: " + name);
        return it->second.value_at(qv);
    }
    const QMonomial& mono(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end()) throw QSeriesError("missing parameter: " + name);
        return it->second;
    }
};

/// A sequence alpha_r, delta_r, u_r, ... bound to a point; any function of r only.
using Seq = std::function<Rational(long)>;

/// One full choice set for the double (arity 2) or triple (arity 3) transform.
/// The arity-2 weight attached to an (m; n, l) triple is
///   u_{n-m} u'_{l-m} v_{n+m} v'_{l+m} t_{n-l} w_{l+n};
/// arity 3 uses u_{n-m} u'_{l-m} u''_{k-m} v_{n+m} v'_{l+m} v''_{k+m}.
/// n_cap/l_cap/k_cap bound the (finite) gamma sums; delta must vanish beyond them.
struct TransformChoices {
    int arity = 2;
    Seq alpha, delta, delta_p, delta_pp;
    Seq u, u_p, u_pp;
    Seq v, v_p, v_pp;
    Seq t, w;  // arity-2 only; defaulted to 1
    long n_cap = 0, l_cap = 0, k_cap = 0;
};

/// beta_{(n,l[,k])} = sum_{m <= min(indices)} alpha_m * weight, by direct summation.
Rational beta_from_alpha(const TransformChoices& ch, long n, long l, long k = 0);

/// gamma_m = sum over n,l[,k] >= m of delta products * weight; finite because
/// delta vanishes beyond the caps.
Rational gamma_from_delta(const TransformChoices& ch, long m);

/// The transform equality sum_m alpha_m gamma_m = sum beta delta delta'[delta''],
/// both sides by direct summation.
bool check_transform(const TransformChoices& ch);

/// Structured alpha shape for the catalogued pairs:
///   alpha_m = w(a,m) * (-1)^m * a^{a_pow * m} * q^{(A m^2 + B m)/2},
/// where w(a,m) = (a;q)_m (1 - a q^{2m}) / ((q;q)_m (1 - a)).
/// The limit steps below are the exponent bookkeeping of b,c,... -> infinity.
struct AlphaShape {
    long a_pow = 0;
    long A = 0;
    long B = 0;
    friend bool operator==(const AlphaShape&, const AlphaShape&) = default;
};

/// One b,c,b',c' -> infinity FBTL step: q^{2m^2} a^{2m} weight per fold.
AlphaShape fbtl_limit_shape(const AlphaShape& s, long folds = 1);
/// One b,...,c'' -> infinity SBTL step: q^{3m^2} a^{3m} weight per fold.
AlphaShape sbtl_limit_shape(const AlphaShape& s, long folds = 1);

/// An evaluable Bailey-type pair at a fixed (a, q) rational point.
/// arity 2: beta(n, l, 0); arity 3: beta(n, l, k). The defining relation
///   beta = sum_m alpha_m / prod (q)_{idx-m} (aq)_{idx+m}
/// is checked by verify_pair, never assumed.
struct BaileyPair {
    int arity = 2;
    std::string id;
    Rational a;
    Rational qv;
    std::function<Rational(long)> alpha;
    std::function<Rational(long, long, long)> beta;
};

/// The alpha weight (a;q)_m (1-aq^{2m}) / ((q;q)_m (1-a)) at a != 1.
Rational vwp_weight(const Rational& a, long m, const Rational& qv);

BaileyPair make_pair_unit(const Rational& a, const Rational& qv);
BaileyPair make_pair_unit_triple(const Rational& a, const Rational& qv);
BaileyPair make_pair_47(const Rational& a, const Rational& qv);
BaileyPair make_pair_48(const Rational& a, const Rational& qv);
BaileyPair make_pair_57(const Rational& a, const Rational& qv);

/// True iff beta(n,l[,k]) equals the defining sum over alpha for all indices
/// up to index_cap, exactly.
bool verify_pair(const BaileyPair& pair, long index_cap);

/// Right side of the defining relation at one index tuple (used by tests).
Rational pair_relation_rhs(const BaileyPair& pair, long n, long l, long k = 0);

/// One first-lemma step producing a new pair; corrected = false swaps in a
/// defective second bracket (qa/(b'c) with unprimed qa/b, qa/c Pochhammers)
/// that fails verify_pair, kept as a negative control.
BaileyPair fbtl_step(const BaileyPair& pair, const Rational& b, const Rational& c,
                     const Rational& bp, const Rational& cp, bool corrected = true);

/// One second-lemma step (triple analogue).
BaileyPair sbtl_step(const BaileyPair& pair, const Rational& b, const Rational& c,
                     const Rational& bp, const Rational& cp,
                     const Rational& bpp, const Rational& cpp);

/// Left fold of FBTL/SBTL steps; tuples are (b, c, b', c'[, b'', c'']).
BaileyPair chain_iterate(const BaileyPair& pair,
                         const std::vector<std::vector<Rational>>& steps);

} // namespace qseries
