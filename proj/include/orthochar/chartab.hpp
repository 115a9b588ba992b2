/**
 * @file chartab.hpp
 * @brief Class functions, the standard functors between groups and Dixon-Schneider tables.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthochar/exact.hpp"
#include "orthochar/matgrp.hpp"

namespace orthochar {

/** One cyclotomic value per conjugacy class, in the group's class order. */
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(const FiniteMatrixGroup* g, std::vector<Cyclotomic> values);
  /** The constant function c. */
  static ClassFunction constant(const FiniteMatrixGroup* g, const Cyclotomic& c);
  static ClassFunction zero(const FiniteMatrixGroup* g) { return constant(g, Cyclotomic(0)); }
  static ClassFunction trivial(const FiniteMatrixGroup* g) { return constant(g, Cyclotomic(1)); }
  /** The regular character. */
  static ClassFunction regular(const FiniteMatrixGroup* g);
  /** Evaluates f at every class representative. */
  static ClassFunction from_rep_map(const FiniteMatrixGroup* g, const std::function<Cyclotomic(const Mat&)>& f);

  const FiniteMatrixGroup* group() const { return g_; }
  const std::vector<Cyclotomic>& values() const { return v_; }
  const Cyclotomic& operator[](int c) const { return v_[c]; }
  const Cyclotomic& at_class(int c) const { return v_.at(c); }
  /** Value at a group element. */
  const Cyclotomic& at(const Mat& x) const;
  /** chi(1) as a rational number. */
  Rational degree() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& r);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& r) { return a *= r; }
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  bool is_zero() const;
  /** Values at the smallest conductor. */
  ClassFunction reduced() const;
  nlohmann::json to_json() const;

 private:
  const FiniteMatrixGroup* g_ = nullptr;
  std::vector<Cyclotomic> v_;
};

/** (1/|H|) sum |C| chi(C) conj(psi(C)); throws for different groups or irrational results. */
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);
/** Induction along a class fusion map from h into g. */
ClassFunction induce(const ClassFunction& phi, const FiniteMatrixGroup& g, const std::vector<int>& fusion);
/** Induction to a supergroup; the fusion is computed. */
ClassFunction induce(const ClassFunction& phi, const FiniteMatrixGroup& g);
/** Restriction along a class fusion map. */
ClassFunction restrict_along(const ClassFunction& chi, const FiniteMatrixGroup& h, const std::vector<int>& fusion);
/** Restriction to a subgroup; the fusion is computed. */
ClassFunction restrict_to(const ClassFunction& chi, const FiniteMatrixGroup& h);
/**
 * Pullback along a homomorphism pi from h to the group of chi. This covers
 * inflation through a quotient realized by a projection onto a complement.
 */
ClassFunction inflate(const ClassFunction& chi, const FiniteMatrixGroup& h, const std::function<Mat(const Mat&)>& pi);
/** Pointwise product. */
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
/** ^x chi (g) = chi(x^{-1} g x) on the group h = x H x^{-1}. */
ClassFunction conjugate(const ClassFunction& chi, const FiniteMatrixGroup& h, const Mat& x);
/** Norm 1 and positive degree. */
bool is_irreducible(const ClassFunction& chi);
/** True when chi is a character: non-negative integer multiplicities against the table. */
bool is_character_of(const ClassFunction& chi, const std::vector<ClassFunction>& irr);

class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(const FiniteMatrixGroup* g, std::vector<ClassFunction> irr);
  const FiniteMatrixGroup* group() const { return g_; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  size_t size() const { return irr_.size(); }
  const ClassFunction& operator[](size_t i) const { return irr_[i]; }
  /** Multiplicities of the irreducibles in chi. */
  std::vector<Rational> decompose(const ClassFunction& chi) const;
  /** Row and column orthogonality and the degree sum; returns an error message or "". */
  std::string verify() const;
  nlohmann::json to_json() const;
  static CharacterTable from_json(const FiniteMatrixGroup* g, const nlohmann::json& j);

 private:
  const FiniteMatrixGroup* g_ = nullptr;
  std::vector<ClassFunction> irr_;
};

/**
 * Dixon-Schneider character table. Irreducibles are sorted by degree, then by
 * their value vectors, with the trivial character first. Results are cached
 * on disk under cache_dir() when caching is enabled.
 */
CharacterTable character_table(const FiniteMatrixGroup& g);
/** Dixon-Schneider without the cache. */
CharacterTable character_table_uncached(const FiniteMatrixGroup& g);

/** Cache directory from ORTHOCHAR_CACHE_DIR, or the user cache default; "" disables caching. */
std::string cache_dir();
/** Worker count from ORTHOCHAR_WORKERS, defaulting to the hardware concurrency. */
int worker_count();

}  // namespace orthochar
