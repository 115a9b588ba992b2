/**
 * @file symbols.cpp
 * @brief Unipotent labels, degree tables, Harish-Chandra branching and identification.
 */
#include "orthochar/symbols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orthochar {

namespace {

std::string partition_str(const std::vector<int>& p) {
  if (p.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> p;
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "-" || s.empty()) return p;
  for (size_t i = 0; i < s.size();) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad partition '" + text + "'");
    int part = s[i] - '0';
    ++i;
    int mult = 1;
    if (i < s.size() && s[i] == '^') {
      size_t j = ++i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad exponent in '" + text + "'");
      mult = std::stoi(s.substr(i, j - i));
      i = j;
    }
    if (part <= 0) throw std::invalid_argument("partition parts must be positive in '" + text + "'");
    for (int k = 0; k < mult; ++k) p.push_back(part);
  }
  if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("partition parts must not increase in '" + text + "'");
  return p;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::vector<int> row_to_partition(const std::vector<int>& row) {
  std::vector<int> p;
  for (size_t i = 0; i < row.size(); ++i)
    if (row[i] - static_cast<int>(i) > 0) p.push_back(row[i] - static_cast<int>(i));
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::vector<int> partition_to_row(const std::vector<int>& p, int len) {
  std::vector<int> asc(len, 0);
  for (size_t i = 0; i < p.size(); ++i) asc[len - 1 - i] = p[i];
  for (int i = 0; i < len; ++i) asc[i] += i;
  return asc;
}

std::vector<std::vector<int>> add_box(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i <= p.size(); ++i) {
    if (i == p.size()) {
      auto x = p;
      x.push_back(1);
      out.push_back(x);
    } else if (i == 0 || p[i - 1] > p[i]) {
      auto x = p;
      ++x[i];
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbols and labels

int SymbolB::rank() const {
  int rs = static_cast<int>(top.size() + bottom.size());
  int h = (rs - 1) / 2;
  return sum(top) + sum(bottom) - h * h;
}

void SymbolB::validate() const {
  for (const auto* row : {&top, &bottom})
    for (size_t i = 0; i < row->size(); ++i) {
      if ((*row)[i] < 0) throw std::invalid_argument("symbol entries must be non-negative");
      if (i > 0 && (*row)[i] <= (*row)[i - 1]) throw std::invalid_argument("symbol rows must increase strictly");
    }
  if (defect() <= 0 || defect() % 2 == 0) throw std::invalid_argument("symbol defect must be odd and positive");
}

std::string SymbolB::str() const {
  auto row = [](const std::vector<int>& r) {
    if (r.empty()) return std::string("-");
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s;
  };
  return "(" + row(top) + " / " + row(bottom) + ")";
}

SymbolB SymbolB::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), '('), s.end());
  s.erase(std::remove(s.begin(), s.end(), ')'), s.end());
  size_t slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("symbol needs a '/' separator: '" + text + "'");
  auto row = [&](const std::string& part) {
    std::vector<int> r;
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (tok == "-") continue;
      r.push_back(std::stoi(tok));
    }
    return r;
  };
  SymbolB out{row(s.substr(0, slash)), row(s.substr(slash + 1))};
  out.validate();
  return out;
}

int UnipotentLabel::rank() const {
  int dp = (defect - 1) / 2;
  return sum(alpha) + sum(beta) + dp * dp + dp;
}

std::string UnipotentLabel::str() const {
  return "[" + partition_str(alpha) + "," + partition_str(beta) + "," + std::to_string(defect) + "]";
}

UnipotentLabel UnipotentLabel::parse(const std::string& text) {
  std::string s = text;
  s = replace_all(s, "−", "-");
  s = replace_all(s, "²", "^2");
  s = replace_all(s, "³", "^3");
  s = replace_all(s, "\\,", " ");
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("label must be bracketed: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw std::invalid_argument("label needs three components: '" + text + "'");
  UnipotentLabel l;
  l.alpha = parse_partition(parts[0]);
  l.beta = parse_partition(parts[1]);
  l.defect = std::stoi(parts[2]);
  if (l.defect <= 0 || l.defect % 2 == 0) throw std::invalid_argument("defect must be odd and positive: '" + text + "'");
  return l;
}

UnipotentLabel symbol_to_label(const SymbolB& s) {
  s.validate();
  return UnipotentLabel{row_to_partition(s.top), row_to_partition(s.bottom), s.defect()};
}

SymbolB label_to_symbol(const UnipotentLabel& l) {
  int a = static_cast<int>(l.alpha.size()), b = static_cast<int>(l.beta.size());
  int s = std::max({b, a - l.defect, 0});
  int r = s + l.defect;
  return SymbolB{partition_to_row(l.alpha, r), partition_to_row(l.beta, s)};
}

// ---------------------------------------------------------------------------
// Polynomials

Poly Poly::q() {
  Poly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

Poly Poly::phi(int k) {
  Poly x = q();
  switch (k) {
    case 1: return x + Poly(-1);
    case 2: return x + Poly(1);
    case 3: return x * x + x + Poly(1);
    case 4: return x * x + Poly(1);
    case 6: return x * x - x + Poly(1);
    default: throw std::invalid_argument("phi_k is tabulated for k in {1, 2, 3, 4, 6}");
  }
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(long q) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    bool unit = c == 1 && i > 0;
    if (!unit) s += rational_to_string(c);
    if (i > 0) s += (unit ? "" : "*") + std::string("q") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::pow(int e) const {
  Poly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  Poly a = *this, b = o;
  a.trim();
  b.trim();
  return a.c_ == b.c_;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

UnipotentRow row(const char* label, const char* symbol, Poly degree) {
  UnipotentRow r;
  r.label = UnipotentLabel::parse(label);
  r.symbol = SymbolB::parse(symbol);
  r.degree = std::move(degree);
  return r;
}

UnipotentRow row_z(const char* label, const char* symbol, Poly degree, std::array<Poly, 3> odd,
                   std::array<Poly, 3> even) {
  UnipotentRow r = row(label, symbol, std::move(degree));
  r.has_z = true;
  r.z_odd = std::move(odd);
  r.z_even = std::move(even);
  return r;
}

std::vector<UnipotentRow> build_rows(int n) {
  const Poly q = Poly::q(), h = Poly::half();
  auto f = [](int k) { return Poly::phi(k); };
  const std::array<Poly, 3> ones{Poly(1), Poly(1), Poly(1)}, zeros{Poly(0), Poly(0), Poly(0)};
  switch (n) {
    case 1: return {row("[-,-,1]", "(0 / -)", 1)};
    case 3: return {row("[1,-,1]", "(1 / -)", 1), row("[-,1,1]", "(0 1 / 1)", q)};
    case 5:
      return {
          row_z("[2,-,1]", "(2 / -)", 1, ones, ones),
          row_z("[-,-,3]", "(0 1 2 / -)", h * q * f(1).pow(2), {h * q * f(1) * Poly(-1), 0, q},
                {h * q * f(1) * Poly(-1), h * q * f(1) * Poly(-1), h * q}),
          row_z("[1^2,-,1]", "(1 2 / 0)", h * q * f(4), {h * q * f(1) * Poly(-1), q, 0},
                {h * q * f(1) * Poly(-1), h * q * f(2), h * q}),
          row_z("[1,1,1]", "(0 2 / 1)", h * q * f(2).pow(2), {h * q * f(2), q, 0},
                {h * q * f(2), h * q * f(2), h * q}),
          row_z("[-,2,1]", "(0 1 / 2)", h * q * f(4), {h * q * f(2), 0, q},
                {h * q * f(2), h * q * f(1) * Poly(-1), h * q}),
          row_z("[-,1^2,1]", "(0 1 2 / 1 2)", q.pow(4), zeros, zeros),
      };
    case 7: {
      const Poly q2 = q.pow(2), q3 = q.pow(3), q4 = q.pow(4);
      const Poly neg(-1);
      return {
          row_z("[3,-,1]", "(3 / -)", 1, ones, ones),
          row_z("[2,1,1]", "(0 3 / 1)", h * q * f(3) * f(4),
                {h * q * (Poly(2) * q2 + q + Poly(1)), h * q * f(2).pow(2), h * q * f(4)},
                {h * q * (Poly(2) * q2 + q + Poly(1)), h * q * f(2) * f(4), h * q * f(3)}),
          row_z("[-,3,1]", "(0 1 / 3)", h * q * f(4) * f(6),
                {h * q * (Poly(2) * q2 - q + Poly(1)), h * q * f(1).pow(2), h * q * f(4)},
                {h * q * (Poly(2) * q2 - q + Poly(1)), neg * h * q * f(1) * f(4), h * q * f(6)}),
          row_z("[21,-,1]", "(1 3 / 0)", h * q * f(2).pow(2) * f(6),
                {h * q * f(2), h * q * f(2).pow(2), h * q * f(4)},
                {h * q * f(2), h * q * f(2) * f(4), h * q * f(3)}),
          row_z("[1,-,3]", "(0 1 3 / -)", h * q * f(1).pow(2) * f(3),
                {neg * h * q * f(1), h * q * f(1).pow(2), h * q * f(4)},
                {neg * h * q * f(1), neg * h * q * f(1) * f(4), h * q * f(6)}),
          row_z("[1,2,1]", "(0 2 / 2)", q2 * f(3) * f(6), {q2 * f(4), q2, q2}, {q2 * f(4), q2, q2}),
          row_z("[1^2,1,1]", "(1 2 / 1)", q3 * f(3) * f(6), {q3, Poly(2) * q3, 0}, {q3, q3 * f(4), q3}),
          row_z("[1,1^2,1]", "(0 1 3 / 1 2)", h * q4 * f(3) * f(4), {h * q4 * f(2), q4, 0},
                {h * q4 * f(2), h * q4 * f(4), h * q4}),
          row_z("[-,21,1]", "(0 1 2 / 1 3)", h * q4 * f(2).pow(2) * f(6), {h * q4 * f(2), 0, q4},
                {h * q4 * f(2), neg * h * q4 * f(1) * f(2), h * q4}),
          row_z("[1^3,-,1]", "(1 2 3 / 0 1)", h * q4 * f(4) * f(6), {neg * h * q4 * f(1), q4, 0},
                {neg * h * q4 * f(1), h * q4 * f(4), h * q4}),
          row_z("[-,1,3]", "(0 1 2 3 / 1)", h * q4 * f(1).pow(2) * f(3), {neg * h * q4 * f(1), 0, q4},
                {neg * h * q4 * f(1), neg * h * q4 * f(1) * f(2), h * q4}),
          row_z("[-,1^3,1]", "(0 1 2 3 / 1 2 3)", q.pow(9), zeros, zeros),
      };
    }
    default: throw std::invalid_argument("unipotent tables exist for n in {1, 3, 5, 7}");
  }
}

}  // namespace

const std::vector<UnipotentRow>& unipotent_rows(int n) {
  static const std::map<int, std::vector<UnipotentRow>> tables = [] {
    std::map<int, std::vector<UnipotentRow>> t;
    for (int k : {1, 3, 5, 7}) t[k] = build_rows(k);
    return t;
  }();
  auto it = tables.find(n);
  if (it == tables.end()) throw std::invalid_argument("unipotent tables exist for n in {1, 3, 5, 7}");
  return it->second;
}

const UnipotentRow& unipotent_row(const UnipotentLabel& l) {
  int n = 2 * l.rank() + 1;
  if (n > 7) throw std::invalid_argument("no table for label " + l.str());
  for (const auto& r : unipotent_rows(n))
    if (r.label == l) return r;
  throw std::invalid_argument("unknown unipotent label " + l.str());
}

Rational unipotent_degree(const UnipotentLabel& l, int q) { return unipotent_row(l).degree.eval(q); }

UnipotentLabel trivial_label(int m) {
  UnipotentLabel l;
  if (m > 0) l.alpha = {m};
  return l;
}

UnipotentLabel steinberg_label(int m) {
  UnipotentLabel l;
  l.beta.assign(m, 1);
  if (m == 0) l.beta.clear();
  return l;
}

std::vector<UnipotentLabel> hc_branch(const UnipotentLabel& l) {
  std::vector<UnipotentLabel> out;
  for (auto& a : add_box(l.alpha)) out.push_back(UnipotentLabel{a, l.beta, l.defect});
  for (auto& b : add_box(l.beta)) out.push_back(UnipotentLabel{l.alpha, b, l.defect});
  return out;
}

const std::vector<HCIdentity>& quoted_hc_identities() {
  static const std::vector<HCIdentity> ids = [] {
    auto P = [](const char* s) { return UnipotentLabel::parse(s); };
    return std::vector<HCIdentity>{
        {P("[1,-,1]"), {P("[2,-,1]"), P("[1^2,-,1]"), P("[1,1,1]")}},
        {P("[-,1,1]"), {P("[1,1,1]"), P("[-,1^2,1]"), P("[-,2,1]")}},
        {P("[2,-,1]"), {P("[3,-,1]"), P("[2,1,1]"), P("[21,-,1]")}},
        {P("[-,-,3]"), {P("[1,-,3]"), P("[-,1,3]")}},
        {P("[-,2,1]"), {P("[-,3,1]"), P("[1,2,1]"), P("[-,21,1]")}},
        {P("[-,1^2,1]"), {P("[1,1^2,1]"), P("[-,21,1]"), P("[-,1^3,1]")}},
        {P("[1,1,1]"), {P("[2,1,1]"), P("[1,2,1]"), P("[1^2,1,1]"), P("[1,1^2,1]")}},
        {P("[1^2,-,1]"), {P("[21,-,1]"), P("[1^2,1,1]"), P("[1^3,-,1]")}},
    };
  }();
  return ids;
}

// ---------------------------------------------------------------------------
// Characters

ClassFunction levi_character(const OrthoContext& ctx, const ClassFunction& chi_child_g, int k) {
  const FiniteMatrixGroup& l = ctx.L();
  const Field& f = ctx.field();
  const int qm1 = ctx.q() - 1;
  return ClassFunction::from_rep_map(&l, [&](const Mat& g) {
    Cyclotomic v = chi_child_g.at(ctx.mid(g));
    if (k % qm1 != 0) v *= Cyclotomic::zeta(qm1, static_cast<long>(k) * f.log(g(0, 0)));
    return v;
  });
}

ClassFunction harish_chandra(const OrthoContext& ctx, const ClassFunction& sigma_on_l) {
  ClassFunction infl = ClassFunction::from_rep_map(&ctx.P(), [&](const Mat& g) { return sigma_on_l.at(ctx.levi(g)); });
  return induce(infl, ctx.G());
}

const UnipotentCharacters& UnipotentCharacters::of(const OrthoContext& ctx) {
  static std::recursive_mutex mu;
  static std::map<const OrthoContext*, std::unique_ptr<UnipotentCharacters>> registry;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = registry.find(&ctx);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<UnipotentCharacters> u(new UnipotentCharacters(ctx));
  return *registry.emplace(&ctx, std::move(u)).first->second;
}

UnipotentCharacters::UnipotentCharacters(const OrthoContext& ctx) : ctx_(&ctx) {
  const FiniteMatrixGroup& g = ctx.G();
  table_ = character_table(g);
  const int n = ctx.n(), q = ctx.q();
  if (n >= 5)
    for (int j = 0; j < 3; ++j) z_classes_[j] = g.class_of(ctx.z(j));
  const UnipotentCharacters* child = n >= 3 ? &of(*ctx.child()) : nullptr;
  std::map<UnipotentLabel, std::vector<int>> pending;
  for (const auto& r : unipotent_rows(n)) {
    std::vector<int> cand;
    Rational deg = r.degree.eval(q);
    for (size_t i = 0; i < table_.size(); ++i) {
      if (table_[i].degree() != deg) continue;
      if (r.has_z) {
        const auto& zv = q % 2 ? r.z_odd : r.z_even;
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) ok = table_[i][z_classes_[j]] == Cyclotomic(zv[j].eval(q));
        if (!ok) continue;
      }
      cand.push_back(static_cast<int>(i));
    }
    std::string how = "fingerprint";
    if (cand.size() > 1 && child) {
      how = "fingerprint+hc";
      std::vector<int> kept;
      for (int i : cand) {
        bool ok = true;
        for (const auto& cl : child->labels()) {
          auto br = hc_branch(cl);
          long expected = std::count(br.begin(), br.end(), r.label);
          ok = ok && inner_product(table_[i], hc_induced(cl)) == expected;
        }
        if (ok) kept.push_back(i);
      }
      cand = kept;
    }
    method_[r.label] = how;
    if (cand.size() == 1) index_[r.label] = cand[0];
    else pending[r.label] = cand;
  }
  // The cuspidal unipotent character of SO_5(q) agrees with [1^2,-,1] + [-,2,1] - [1,1,1] on semisimple classes.
  const UnipotentLabel cusp = UnipotentLabel::parse("[-,-,3]");
  if (n == 5 && pending.count(cusp)) {
    std::vector<int> kept;
    const ClassFunction ref = table_[index(UnipotentLabel::parse("[1^2,-,1]"))] +
                              table_[index(UnipotentLabel::parse("[-,2,1]"))] -
                              table_[index(UnipotentLabel::parse("[1,1,1]"))];
    const auto& classes = g.classes();
    for (int i : pending[cusp]) {
      bool ok = true;
      for (size_t c = 0; c < classes.size() && ok; ++c)
        if (classes[c].elt_order % ctx.field().p() != 0) ok = table_[i][static_cast<int>(c)] == ref[static_cast<int>(c)];
      if (ok) kept.push_back(i);
    }
    pending[cusp] = kept;
    method_[cusp] += "+semisimple";
    if (kept.size() == 1) {
      index_[cusp] = kept[0];
      pending.erase(cusp);
    }
  }
  for (const auto& [l, cand] : pending) {
    std::string list;
    for (int i : cand) list += " " + std::to_string(i);
    throw std::runtime_error("cannot identify " + l.str() + " in " + g.name() + ": candidates {" + list + " }");
  }
  for (const auto& r : unipotent_rows(n)) {
    for (const auto& l : labels_)
      if (index_[l] == index_[r.label]) throw std::runtime_error(r.label.str() + " and " + l.str() + " match the same character");
    labels_.push_back(r.label);
  }
}

int UnipotentCharacters::index(const UnipotentLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw std::invalid_argument("no unipotent character " + l.str() + " for " + ctx_->tag());
  return it->second;
}

std::optional<UnipotentLabel> UnipotentCharacters::label_of(int i) const {
  for (const auto& [l, idx] : index_)
    if (idx == i) return l;
  return std::nullopt;
}

ClassFunction UnipotentCharacters::sigma(const UnipotentLabel& child_label) const {
  const auto& child = of(*ctx_->child());
  return levi_character(*ctx_, child.character(child_label), 0);
}

ClassFunction UnipotentCharacters::hc_induced(const UnipotentLabel& child_label) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = hc_cache_.find(child_label);
    if (it != hc_cache_.end()) return it->second;
  }
  ClassFunction r = harish_chandra(*ctx_, sigma(child_label));
  std::lock_guard<std::mutex> lock(mu_);
  hc_cache_[child_label] = r;
  return r;
}

// ---------------------------------------------------------------------------
// Checks

CheckList check_symbol_tables() {
  CheckList out;
  for (int n : {5, 7})
    for (const auto& r : unipotent_rows(n)) {
      const std::string p = "n=" + std::to_string(n);
      const int m = (n - 1) / 2;
      out.push_back(make_check("symbol of " + r.label.str(), p, r.symbol.str(), label_to_symbol(r.label).str()));
      out.push_back(make_check("bipartition of " + r.symbol.str(), p, r.label.str(), symbol_to_label(r.symbol).str()));
      out.push_back(make_check("rank of " + r.symbol.str(), p, std::to_string(m), std::to_string(r.symbol.rank())));
      out.push_back(make_check("rank of " + r.label.str(), p, std::to_string(m), std::to_string(r.label.rank())));
      out.push_back(make_check("label text round trip " + r.label.str(), p, r.label.str(),
                               UnipotentLabel::parse(r.label.str()).str()));
    }
  return out;
}

CheckList check_hc_branch_labels() {
  CheckList out;
  auto joined = [](std::vector<UnipotentLabel> v) {
    std::sort(v.begin(), v.end());
    std::string s;
    for (const auto& l : v) s += (s.empty() ? "" : " + ") + l.str();
    return s;
  };
  for (const auto& id : quoted_hc_identities())
    out.push_back(make_check("R_L^G(" + id.source.str() + ")", "rank " + std::to_string(id.source.rank() + 1),
                             joined(id.targets), joined(hc_branch(id.source))));
  return out;
}

CheckList check_unipotent(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& u = UnipotentCharacters::of(ctx);
  const int q = ctx.q();
  Rational sq = 0;
  for (const auto& r : unipotent_rows(ctx.n())) {
    const ClassFunction& chi = u.character(r.label);
    out.push_back(make_check("degree of " + r.label.str(), p, rational_to_string(r.degree.eval(q)),
                             rational_to_string(chi.degree())));
    sq += chi.degree() * chi.degree();
    if (r.has_z) {
      const auto& zv = q % 2 ? r.z_odd : r.z_even;
      std::string e, c;
      for (int j = 0; j < 3; ++j) {
        e += (j ? "," : "") + rational_to_string(zv[j].eval(q));
        c += (j ? "," : "") + chi[u.z_classes()[j]].str();
      }
      out.push_back(make_check("values of " + r.label.str() + " on z_0, z_1, z_2", p, e, c));
    }
  }
  out.push_back(make_bool_check("sum of squared unipotent degrees <= |G|", p, sq <= Rational(static_cast<long>(ctx.G().order()))));
  if (ctx.n() >= 3) {
    const auto& child = UnipotentCharacters::of(*ctx.child());
    for (const auto& cl : child.labels()) {
      ClassFunction rhs = ClassFunction::zero(&ctx.G());
      std::string names;
      for (const auto& l : hc_branch(cl)) {
        rhs += u.character(l);
        names += (names.empty() ? "" : " + ") + l.str();
      }
      ClassFunction lhs = u.hc_induced(cl);
      out.push_back(make_bool_check("R_L^G(" + cl.str() + ") = " + names, p, lhs == rhs,
                                    "difference has norm " + rational_to_string(inner_product(lhs - rhs, lhs - rhs))));
    }
  }
  return out;
}

}  // namespace orthochar
