#include "balsq/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace balsq {

RingSignature::RingSignature(int colors, std::vector<int> counts)
    : colors_(colors), counts_(std::move(counts)) {
  if (colors_ < 0) throw input_error("ring signature: negative color count");
  if (static_cast<int>(counts_.size()) != colors_)
    throw input_error("ring signature: counts size differs from color count");
  offsets_.resize(colors_ + 1, 0);
  for (int i = 0; i < colors_; ++i) {
    if (counts_[i] < 0) throw input_error("ring signature: negative variable count");
    offsets_[i + 1] = offsets_[i] + counts_[i];
  }
  total_ = offsets_[colors_];
}

int RingSignature::count(int color) const {
  if (color < 1 || color > colors_) throw input_error("ring signature: color out of range");
  return counts_[color - 1];
}

bool RingSignature::contains(Variable v) const {
  return v.color >= 1 && v.color <= colors_ && v.index >= 1 && v.index <= counts_[v.color - 1];
}

int RingSignature::var_id(Variable v) const {
  if (!contains(v)) {
    std::ostringstream os;
    os << "variable x[" << v.color << "," << v.index << "] not in ring " << str();
    throw input_error(os.str());
  }
  return offsets_[v.color - 1] + (v.index - 1);
}

Variable RingSignature::var_at(int id) const {
  if (id < 0 || id >= total_) throw input_error("variable id out of range");
  int color = 1;
  while (offsets_[color] <= id) ++color;
  return Variable{color, id - offsets_[color - 1] + 1};
}

std::vector<Variable> RingSignature::variables() const {
  std::vector<Variable> out;
  out.reserve(total_);
  for (int id = 0; id < total_; ++id) out.push_back(var_at(id));
  return out;
}

RingSignature RingSignature::extended() const {
  std::vector<int> counts = counts_;
  for (int& c : counts) ++c;
  return RingSignature(colors_, std::move(counts));
}

std::string RingSignature::str() const {
  std::ostringstream os;
  os << "P(" << colors_ << ",(";
  for (int i = 0; i < colors_; ++i) os << (i ? "," : "") << counts_[i];
  os << "))";
  return os.str();
}

Monomial::Monomial(RingSignature sig, FineDegree exponents)
    : sig_(std::move(sig)), exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != sig_.total_variables())
    throw input_error("monomial: exponent vector does not match signature");
  for (int e : exps_)
    if (e < 0) throw input_error("monomial: negative exponent");
}

Monomial Monomial::one(const RingSignature& sig) {
  return Monomial(sig, FineDegree(sig.total_variables(), 0));
}

Monomial Monomial::of_variable(const RingSignature& sig, Variable v) {
  FineDegree e(sig.total_variables(), 0);
  e[sig.var_id(v)] = 1;
  return Monomial(sig, std::move(e));
}

Monomial Monomial::of_variables(const RingSignature& sig, const std::vector<Variable>& vs) {
  FineDegree e(sig.total_variables(), 0);
  for (Variable v : vs) e[sig.var_id(v)] += 1;
  return Monomial(sig, std::move(e));
}

int Monomial::exponent(Variable v) const { return exps_[sig_.var_id(v)]; }

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::vector<int> Monomial::zd_degree() const {
  std::vector<int> out(sig_.colors(), 0);
  for (int id = 0; id < sig_.total_variables(); ++id)
    out[sig_.var_at(id).color - 1] += exps_[id];
  return out;
}

std::vector<int> Monomial::color_support() const {
  std::vector<int> zd = zd_degree();
  std::vector<int> out;
  for (int i = 0; i < sig_.colors(); ++i)
    if (zd[i] > 0) out.push_back(i + 1);
  return out;
}

unsigned Monomial::color_support_mask() const {
  unsigned mask = 0;
  for (int c : color_support()) mask |= 1u << (c - 1);
  return mask;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::is_color_squarefree() const {
  std::vector<int> zd = zd_degree();
  return std::all_of(zd.begin(), zd.end(), [](int s) { return s <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (sig_ != other.sig_) throw input_error("divides: signatures differ");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (sig_ != other.sig_) throw input_error("product: signatures differ");
  FineDegree e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(sig_, std::move(e));
}

Monomial Monomial::operator*(Variable v) const {
  FineDegree e = exps_;
  e[sig_.var_id(v)] += 1;
  return Monomial(sig_, std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) throw input_error("divided_by: not divisible");
  FineDegree e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(sig_, std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (sig_ != other.sig_) throw input_error("gcd: signatures differ");
  FineDegree e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], other.exps_[i]);
  return Monomial(sig_, std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (sig_ != other.sig_) throw input_error("lcm: signatures differ");
  FineDegree e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(sig_, std::move(e));
}

std::vector<std::pair<Variable, int>> Monomial::factors() const {
  std::vector<std::pair<Variable, int>> out;
  for (int id = 0; id < sig_.total_variables(); ++id)
    if (exps_[id] > 0) out.emplace_back(sig_.var_at(id), exps_[id]);
  return out;
}

Monomial Monomial::in_signature(const RingSignature& target) const {
  FineDegree e(target.total_variables(), 0);
  for (const auto& [v, k] : factors()) {
    if (!target.contains(v)) {
      std::ostringstream os;
      os << "monomial " << str() << " does not embed into " << target.str();
      throw input_error(os.str());
    }
    e[target.var_id(v)] = k;
  }
  return Monomial(target, std::move(e));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, k] : factors())
    for (int r = 0; r < k; ++r) {
      if (!first) os << "*";
      os << "x[" << v.color << "," << v.index << "]";
      first = false;
    }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Variable parse_variable_token(std::string_view tok) {
  std::string t(trim(tok));
  if (t.size() < 6 || t[0] != 'x' || t[1] != '[' || t.back() != ']')
    throw input_error("cannot parse monomial factor '" + t + "' (expected x[i,j])");
  std::string inner = t.substr(2, t.size() - 3);
  auto comma = inner.find(',');
  if (comma == std::string::npos)
    throw input_error("cannot parse monomial factor '" + t + "' (expected x[i,j])");
  try {
    int color = std::stoi(std::string(trim(inner.substr(0, comma))));
    int index = std::stoi(std::string(trim(inner.substr(comma + 1))));
    return Variable{color, index};
  } catch (const std::exception&) {
    throw input_error("cannot parse monomial factor '" + t + "' (expected x[i,j])");
  }
}

}  // namespace

Monomial Monomial::parse(const RingSignature& sig, std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw input_error("cannot parse empty monomial text");
  if (body == "1") return Monomial::one(sig);
  FineDegree e(sig.total_variables(), 0);
  while (true) {
    auto star = body.find('*');
    std::string_view tok = star == std::string_view::npos ? body : body.substr(0, star);
    Variable v = parse_variable_token(tok);
    if (!sig.contains(v)) {
      std::ostringstream os;
      os << "variable x[" << v.color << "," << v.index << "] not in ring " << sig.str();
      throw input_error(os.str());
    }
    e[sig.var_id(v)] += 1;
    if (star == std::string_view::npos) break;
    body.remove_prefix(star + 1);
  }
  return Monomial(sig, std::move(e));
}

std::strong_ordering var_compare_prec(Variable a, Variable b) {
  if (a.color != b.color) return a.color <=> b.color;
  return a.index <=> b.index;
}

std::strong_ordering var_compare_sec5(Variable a, Variable b) {
  return var_compare_prec(b, a);
}

std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
  if (a.signature() != b.signature()) throw input_error("revlex_compare: signatures differ");
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  const FineDegree& ea = a.exponents();
  const FineDegree& eb = b.exponents();
  // Dense ids ascend with var_compare_prec; the first differing position is
  // the prec-smallest differing variable, where the larger exponent loses.
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_compare_sec5(const Monomial& a, const Monomial& b) {
  if (a.signature() != b.signature()) throw input_error("revlex_compare_sec5: signatures differ");
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  const FineDegree& ea = a.exponents();
  const FineDegree& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;)
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  return std::strong_ordering::equal;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == std::strong_ordering::less;
}

bool leq_s(const Monomial& a, const Monomial& b) {
  if (a.signature() != b.signature()) throw input_error("leq_s: signatures differ");
  if (!a.is_color_squarefree() || !b.is_color_squarefree())
    throw input_error("leq_s: arguments must be color-squarefree");
  auto fa = a.factors();
  auto fb = b.factors();
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].first.color != fb[i].first.color) return false;
    if (fa[i].first.index > fb[i].first.index) return false;
  }
  return true;
}

bool leq_cs(const Monomial& a, const Monomial& b, const LeqCsOptions& options) {
  if (a.signature() != b.signature()) throw input_error("leq_cs: signatures differ");
  if (!a.is_color_squarefree() || !b.is_color_squarefree())
    throw input_error("leq_cs: arguments must be color-squarefree");
  if (a.color_support_mask() != b.color_support_mask()) return false;
  if (a.degree() != b.degree()) return false;
  if (a == b) return true;

  const RingSignature& sig = a.signature();
  std::set<FineDegree> seen;
  std::queue<Monomial> frontier;
  seen.insert(b.exponents());
  frontier.push(b);
  while (!frontier.empty()) {
    Monomial w = frontier.front();
    frontier.pop();
    for (const auto& [from, k] : w.factors()) {
      (void)k;
      Monomial base = w.divided_by(Monomial::of_variable(sig, from));
      for (int id = 0; id < sig.var_id(from); ++id) {
        Variable to = sig.var_at(id);  // ids below from are exactly the prec-smaller variables
        if (options.support_preserving && to.color != from.color) continue;
        Monomial next = base * to;
        if (!next.is_color_squarefree()) continue;
        if (options.support_preserving && next.color_support_mask() != w.color_support_mask())
          continue;
        if (!seen.insert(next.exponents()).second) continue;
        if (next == a) return true;
        frontier.push(next);
      }
    }
  }
  return false;
}

namespace {

void enumerate_exponents(const RingSignature& sig, int id, int remaining, FineDegree& acc,
                         std::vector<Monomial>& out) {
  if (id == sig.total_variables()) {
    if (remaining == 0) out.emplace_back(sig, acc);
    return;
  }
  if (id == sig.total_variables() - 1) {
    acc[id] = remaining;
    out.emplace_back(sig, acc);
    acc[id] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    acc[id] = e;
    enumerate_exponents(sig, id + 1, remaining - e, acc, out);
  }
  acc[id] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingSignature& sig, int degree) {
  if (degree < 0) throw input_error("monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  if (sig.total_variables() == 0) {
    if (degree == 0) out.push_back(Monomial::one(sig));
    return out;
  }
  FineDegree acc(sig.total_variables(), 0);
  enumerate_exponents(sig, 0, degree, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to_degree(const RingSignature& sig, int bound) {
  std::vector<Monomial> out;
  for (int d = 0; d <= bound; ++d) {
    std::vector<Monomial> layer = monomials_of_degree(sig, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Monomial> color_squarefree_monomials(const RingSignature& sig) {
  // One choice per color: absent, or one of its indices.
  std::vector<Monomial> out{Monomial::one(sig)};
  for (int color = 1; color <= sig.colors(); ++color) {
    std::vector<Monomial> next;
    next.reserve(out.size() * (sig.count(color) + 1));
    for (const Monomial& m : out) {
      next.push_back(m);
      for (int j = 1; j <= sig.count(color); ++j) next.push_back(m * Variable{color, j});
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace balsq
