#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdg3/mis.hpp"
#include "fdg3/predicates.hpp"
#include "fdg3/rational.hpp"
#include "fdg3/relation.hpp"

namespace fdg3 {

enum class Strategy { Auto, Fastpath, Cograph, Comparability, Exact, Brute, Greedy };
enum class Method { FastpathEquality, Cograph, Comparability, ExactMis, BruteForce, GreedyBound };

const char* method_name(Method m);          // "fastpath_equality", "cograph", ...
const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // UsageError on unknown

struct G3Result {
  Rational g3;                     // (|r| - kept) / |r|, lowest terms; 0/1 on empty input
  size_t kept = 0;                 // maximum satisfying subrelation size
  std::vector<uint32_t> witness;   // sorted original row indices, |witness| == kept
  Method method = Method::ExactMis;
  bool exact = true;               // false only for greedy_bound
};

struct SatisfiesResult {
  bool satisfied = true;
  size_t i = 0, j = 0;  // lexicographically smallest counterexample when violated
};

// Definition-level satisfaction: no ordered pair (i = j included) is a
// counterexample.
SatisfiesResult satisfies(const Relation& r, const PredicateSet& phi,
                          const FunctionalDependency& fd);

// Same check restricted to a subset of row indices; used by the brute-force
// oracle and for witness re-validation. Bypasses all graph machinery.
bool satisfies_subset(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                      const std::vector<uint32_t>& rows);

// Classical polynomial fastpath: group rows by X projection and keep the
// most frequent A value of each group. Precondition (checked): every
// predicate on X and A is equality-kind and those columns hold no nulls.
G3Result g3_equality_fastpath(const Relation& r, const FunctionalDependency& fd);

struct EngineOptions {
  Strategy strategy = Strategy::Auto;
  size_t mis_cap = kDefaultMisCap;  // exact-solver vertex guard
};

// Strategy auto picks, in order: the equality fastpath; the cotree solver
// when every predicate on X and A is symmetric and transitive on its active
// domain; the antichain solver when the X predicates are transitive and the
// A predicate is a total order; exact branch and bound otherwise. Forced
// strategies raise UsageError instead of falling back.
G3Result compute_g3(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                    const EngineOptions& opts = {});

// g3 <= k in exact rational arithmetic. Requires 0 <= k <= 1.
bool decide_evpp(const Relation& r, const PredicateSet& phi, const FunctionalDependency& fd,
                 const Rational& k, const EngineOptions& opts = {});

}  // namespace fdg3
