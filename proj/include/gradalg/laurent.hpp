#pragma once

// Laurent polynomials with exact integer coefficients, cluster mutation and
// degree extraction.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/seed.hpp"

namespace gradalg {

using Exponent = std::vector<std::int64_t>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Term {
  Exponent exponent;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial. Terms are kept sorted lexicographically by
/// exponent with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.push_back({Exponent(nvars, 0), c});
    return p;
  }
  static LaurentPoly variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), 1);
  }
  static LaurentPoly monomial(Exponent e, const Integer& c) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
  }
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::map<Exponent, Integer> acc;
    for (auto& t : terms) {
      if (t.exponent.size() != nvars) fail(ErrorKind::BadShape, "exponent length mismatch");
      acc[std::move(t.exponent)] += t.coeff;
    }
    LaurentPoly p(nvars);
    for (auto& [e, c] : acc)
      if (c != 0) p.terms_.push_back({e, c});
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Coefficient of x^e (zero if absent).
  Integer coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exponent < x; });
    return (it != terms_.end() && it->exponent == e) ? it->coeff : Integer(0);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  /// Canonical total order: by term count, then lexicographically by terms.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exponent != b.terms_[i].exponent) return a.terms_[i].exponent < b.terms_[i].exponent;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return false;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars_);
    if (b.size() == 1) return a.times_monomial(b.terms_[0].exponent, b.terms_[0].coeff);
    if (a.size() == 1) return b.times_monomial(a.terms_[0].exponent, a.terms_[0].coeff);
    std::unordered_map<Exponent, Integer, ExponentHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 1);
    Exponent e(a.nvars_);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta.exponent[i] + tb.exponent[i];
        auto [it, inserted] = acc.try_emplace(e);
        mpz_addmul(it->second.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    LaurentPoly p(a.nvars_);
    p.terms_.reserve(acc.size());
    for (auto& [ex, c] : acc)
      if (c != 0) p.terms_.push_back({ex, std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
    return p;
  }

  LaurentPoly times_monomial(const Exponent& e, const Integer& c) const {
    LaurentPoly p(nvars_);
    if (c == 0) return p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) t.exponent[i] += e[i];
      t.coeff *= c;
    }
    return p;  // shifting by a fixed vector preserves lex order
  }

  LaurentPoly pow(std::size_t k) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  /// Exact quotient this / d in the Laurent ring. Long division on the
  /// lexicographic leading term; any remainder raises InexactDivision.
  LaurentPoly exact_divide(const LaurentPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) fail(ErrorKind::InexactDivision, "division by zero polynomial");
    if (is_zero()) return LaurentPoly(nvars_);
    if (d.size() == 1) {
      const Term& t = d.terms_[0];
      LaurentPoly q(nvars_);
      q.terms_ = terms_;
      for (auto& term : q.terms_) {
        if (!mpz_divisible_p(term.coeff.get_mpz_t(), t.coeff.get_mpz_t()))
          fail(ErrorKind::InexactDivision, "coefficient not divisible by monomial coefficient");
        term.coeff /= t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i) term.exponent[i] -= t.exponent[i];
      }
      return q;
    }
    const Term& lead = d.terms_.back();
    // Every quotient term lies between low(this) - low(d) and lead(this) - lead(d).
    Exponent floor = sub(terms_.front().exponent, d.terms_.front().exponent);
    std::map<Exponent, Integer> rem;
    for (const auto& t : terms_) rem.emplace(t.exponent, t.coeff);
    std::vector<Term> quotient;
    Exponent shifted(nvars_);
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      Exponent qe = sub(top->first, lead.exponent);
      if (qe < floor || !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t()))
        fail(ErrorKind::InexactDivision, "Laurent division left a remainder");
      Integer qc = top->second / lead.coeff;
      for (const auto& t : d.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) shifted[i] = t.exponent[i] + qe[i];
        auto [it, inserted] = rem.try_emplace(shifted);
        mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
        if (it->second == 0) rem.erase(it);
      }
      quotient.push_back({std::move(qe), std::move(qc)});
    }
    std::reverse(quotient.begin(), quotient.end());
    LaurentPoly q(nvars_);
    q.terms_ = std::move(quotient);
    return q;
  }

  /// "coeff:e1,...,en;coeff:..." in ascending lexicographic exponent order.
  std::string serialize() const {
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) out += ';';
      out += terms_[k].coeff.get_str();
      out += ':';
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (i) out += ',';
        out += std::to_string(terms_[k].exponent[i]);
      }
    }
    return out;
  }

  static LaurentPoly parse(std::size_t nvars, const std::string& text) {
    std::vector<Term> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) fail(ErrorKind::ParseError, "term without ':' in '" + item + "'");
      Term t;
      try {
        t.coeff = Integer(item.substr(0, colon));
      } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "bad coefficient in '" + item + "'");
      }
      std::stringstream es(item.substr(colon + 1));
      std::string num;
      try {
        while (std::getline(es, num, ',')) t.exponent.push_back(std::stoll(num));
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad exponent in '" + item + "'");
      }
      terms.push_back(std::move(t));
    }
    return from_terms(nvars, std::move(terms));
  }

  /// Human-readable form such as "x2/x1 + 1/x1".
  std::string pretty(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = terms_.size(); k-- > 0;) {
      const Term& t = terms_[k];
      std::string num, den;
      for (std::size_t i = 0; i < nvars_; ++i) {
        auto e = t.exponent[i];
        if (e == 0) continue;
        std::string f = names.at(i) + (std::llabs(e) > 1 ? "^" + std::to_string(std::llabs(e)) : "");
        std::string& side = e > 0 ? num : den;
        side += side.empty() ? f : "*" + f;
      }
      Integer c = t.coeff;
      bool negative = c < 0;
      if (negative) c = -c;
      std::string body;
      if (num.empty()) body = c.get_str();
      else body = (c == 1 ? "" : c.get_str() + "*") + num;
      if (!den.empty()) body += "/" + (den.find('*') != std::string::npos ? "(" + den + ")" : den);
      if (out.empty()) out = (negative ? "-" : "") + body;
      else out += (negative ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  static Exponent sub(const Exponent& a, const Exponent& b) {
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
  }

  void check_compatible(const LaurentPoly& other) const {
    if (nvars_ != other.nvars_) fail(ErrorKind::BadShape, "Laurent polynomials in different rings");
  }

  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int sign) {
    a.check_compatible(b);
    LaurentPoly p(a.nvars_);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exponent < b.terms_[j].exponent)) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exponent < a.terms_[i].exponent) {
        p.terms_.push_back({b.terms_[j].exponent, sign * b.terms_[j].coeff});
        ++j;
      } else {
        Integer c = a.terms_[i].coeff + sign * b.terms_[j].coeff;
        if (c != 0) p.terms_.push_back({a.terms_[i].exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// A graded seed together with its cluster, expressed in the initial variables.
struct ClusterState {
  GradedSeed graded_seed;
  std::vector<LaurentPoly> cluster;

  friend bool operator==(const ClusterState&, const ClusterState&) = default;
};

inline ClusterState initial_state(GradedSeed gs) {
  require_valid(gs);
  ClusterState s;
  const std::size_t n = gs.seed.n;
  for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
  s.graded_seed = std::move(gs);
  return s;
}

namespace detail {
inline std::size_t to_count(const Integer& x) {
  if (!x.fits_ulong_p()) fail(ErrorKind::TooLarge, "exponent does not fit");
  return x.get_ui();
}
}  // namespace detail

/// Replaces x_k by (M_+ + M_-) / x_k, with M_+- the monomials in the current
/// cluster prescribed by the exchange vectors.
inline ClusterState mutate_cluster(const ClusterState& state, std::size_t k) {
  const Seed& seed = state.graded_seed.seed;
  ExchangeVectors ev = exchange_vectors(seed, k);
  const std::size_t n = seed.n;
  auto product = [&](const IntVector& exps) {
    LaurentPoly p = LaurentPoly::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || exps[i] == 0) continue;
      p = p * state.cluster[i].pow(detail::to_count(exps[i]));
    }
    return p;
  };
  LaurentPoly numerator = product(ev.plus) + product(ev.minus);
  ClusterState out;
  out.graded_seed = mutate_graded_seed(state.graded_seed, k);
  out.cluster = state.cluster;
  out.cluster[k] = numerator.exact_divide(state.cluster[k]);
  return out;
}

struct NonHomogeneous {
  Exponent first;
  Exponent second;
};

using DegreeResult = std::variant<FgAbelianGroup::Element, NonHomogeneous>;

inline FgAbelianGroup::Element monomial_degree(const Exponent& e, const Grading& g) {
  if (e.size() != g.values.size()) fail(ErrorKind::BadShape, "grading length does not match variable count");
  auto acc = g.group.zero();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) acc = g.group.add(acc, g.group.scale(Integer(static_cast<long>(e[i])), g.values[i]));
  return acc;
}

/// Common degree of all terms, or a pair of terms of different degree.
inline DegreeResult degree_of(const LaurentPoly& p, const Grading& g) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  const auto& terms = p.terms();
  auto first = monomial_degree(terms[0].exponent, g);
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (monomial_degree(terms[i].exponent, g) != first)
      return NonHomogeneous{terms[0].exponent, terms[i].exponent};
  return first;
}

inline bool is_homogeneous(const DegreeResult& r) { return std::holds_alternative<FgAbelianGroup::Element>(r); }

struct GrassmannianDatum {
  IntVector dimension;  ///< length r
  Integer chi;
};

/// x^index * sum_v chi_v x^(B v). Requires the v = 0 entry with chi = 1.
inline LaurentPoly evaluate_cluster_character(const IntVector& index, const IntMatrix& b,
                                              const std::vector<GrassmannianDatum>& data) {
  const std::size_t n = index.size();
  if (b.rows() != n) fail(ErrorKind::BadShape, "index length does not match B rows");
  bool has_empty = false;
  std::vector<Term> terms;
  for (const auto& d : data) {
    if (d.dimension.size() != b.cols()) fail(ErrorKind::BadShape, "dimension vector length does not match B cols");
    bool zero = std::all_of(d.dimension.begin(), d.dimension.end(), [](const Integer& x) { return x == 0; });
    if (zero && d.chi == 1) has_empty = true;
    IntVector shift = b * d.dimension;
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer v = index[i] + shift[i];
      if (!v.fits_slong_p()) fail(ErrorKind::TooLarge, "exponent does not fit");
      e[i] = v.get_si();
    }
    terms.push_back({std::move(e), d.chi});
  }
  if (!has_empty) fail(ErrorKind::MissingEmptySubmodule, "Grassmannian data lacks the zero submodule with chi = 1");
  return LaurentPoly::from_terms(n, std::move(terms));
}

}  // namespace gradalg
