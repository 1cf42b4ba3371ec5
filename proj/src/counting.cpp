#include "cubal/counting.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cubal {

namespace {

BigCount pow_ui(unsigned long base, unsigned long exp) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigCount pow_big(unsigned long base, const BigCount& exp) {
  if (!exp.fits_ulong_p())
    throw std::invalid_argument("counting: exponent too large to materialize");
  return pow_ui(base, exp.get_ui());
}

std::vector<unsigned> checked_J(const FreeInstance& inst, std::vector<unsigned> J) {
  if (J.empty()) throw std::invalid_argument("eta: J must be non-empty");
  std::sort(J.begin(), J.end());
  if (std::adjacent_find(J.begin(), J.end()) != J.end())
    throw std::invalid_argument("eta: J has repeated indices");
  if (J.back() > inst.k) throw std::invalid_argument("eta: index exceeds k");
  return J;
}

}  // namespace

BigCount alpha_total(unsigned k) { return (pow_ui(3, k + 1) - 1) / 2; }

BigCount alpha_distinct_meet(unsigned k, unsigned n) {
  if (n > k + 1) throw std::invalid_argument("alpha_distinct_meet: need n <= k+1");
  return (pow_ui(3, k + 1 - n) - 1) / 2;
}

BigCount atoms_in_upper_interval(const BoolAlg& B, const Interval& x) {
  if (!x.parent().same_as(B))
    throw std::invalid_argument("atoms_in_upper_interval: interval not over this algebra");
  const Element blocked = meet(complement(x.lo()), x.hi());
  return BigCount(B.atom_count()) - atoms_below(blocked);
}

BigCount localization_size(const BoolAlg& B, const Interval& x) {
  return pow_big(3, atoms_in_upper_interval(B, x));
}

std::vector<Interval> eta(const FreeInstance& inst, const std::vector<unsigned>& J_in) {
  const auto J = checked_J(inst, J_in);
  std::vector<Interval> out;
  out.reserve(J.size());
  out.push_back(inst.gens[J[0]]);
  for (size_t p = 1; p < J.size(); ++p) {
    const Interval& I = inst.gens[J[p]];
    const Interval& prev = out.back();
    out.push_back(interval_join(prev, interval_delta(interval_join(prev, I), I)));
  }
  return out;
}

Interval eta_closed_form(const FreeInstance& inst, const std::vector<unsigned>& J_in,
                         unsigned i) {
  const auto J = checked_J(inst, J_in);
  if (i >= J.size()) throw std::out_of_range("eta_closed_form: position exceeds |J|");
  Element lo = inst.s(J[0]);
  Element hi = inst.t(J[0]);
  for (unsigned p = 1; p <= i; ++p) {
    lo = meet(lo, join(inst.s(J[p]), complement(inst.t(J[p]))));
    hi = join(hi, difference(inst.t(J[p]), inst.s(J[p])));
  }
  return Interval(std::move(lo), std::move(hi));
}

BigCount phi(unsigned k, unsigned l) {
  if (l > k) throw std::invalid_argument("phi: need l <= k (integrality)");
  return pow_ui(3, k - l) * pow_ui(2, l);
}

BigCount free_algebra_size(unsigned m) {
  if (m == 0)
    throw std::invalid_argument("free_algebra_size: the construction needs m >= 1 generators");
  if (m > 12) throw std::invalid_argument("free_algebra_size: m > 12 not supported");
  const unsigned k = m - 1;
  BigCount total = 0;
  for (unsigned i = 1; i <= k + 1; ++i) {
    BigCount binom;
    mpz_bin_uiui(binom.get_mpz_t(), k + 1, i);
    const BigCount term = binom * pow_big(3, phi(k, i - 1));
    if (i % 2 == 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigCount embedding_upper_bound(unsigned m) {
  if (m == 0) throw std::invalid_argument("embedding_upper_bound: need m >= 1");
  if (m > 12) throw std::invalid_argument("embedding_upper_bound: m > 12 not supported");
  return pow_big(3, pow_ui(2, 2 * m));
}

std::string size_table_text(unsigned N) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "m" << std::setw(12) << "atoms" << std::setw(28)
     << "free_size" << "upper_bound\n";
  for (unsigned m = 1; m <= N; ++m) {
    std::string bound = embedding_upper_bound(m).get_str();
    if (bound.size() > 24) bound = bound.substr(0, 10) + "...(" +
                                   std::to_string(bound.size()) + " digits)";
    os << std::left << std::setw(4) << m << std::setw(12)
       << alpha_total(m - 1).get_str() << std::setw(28) << free_algebra_size(m).get_str()
       << bound << "\n";
  }
  return os.str();
}

nlohmann::json size_table_json(unsigned N) {
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned m = 1; m <= N; ++m) {
    rows.push_back({{"m", m},
                    {"atoms", alpha_total(m - 1).get_str()},
                    {"free_size", free_algebra_size(m).get_str()},
                    {"upper_bound", embedding_upper_bound(m).get_str()}});
  }
  return nlohmann::json{{"rows", rows}};
}

}  // namespace cubal
