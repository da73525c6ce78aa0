#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplab/simplex_max.hpp"
#include "cplab/space.hpp"
#include "cplab/table.hpp"

namespace cplab {

// The eight classes of Fig. 3 plus the invariant IID e-variables and
// the test-conditional exchangeability e-variables.
enum class ClassLabel { PR, PX, PtR, PtX, ER, EX, EtR, EtX, EiR, TestCondEX };

std::string to_string(ClassLabel c);
ClassLabel class_from_string(const std::string& s);
bool is_p_class(ClassLabel c);

struct Witness {
  enum class Kind { None, BagKind, DistKind, SeqKind };
  Kind kind = Kind::None;
  Bag bag;
  Distribution q;
  std::vector<int> seq;
  std::optional<double> epsilon;  // level at which a p-check was worst
};

struct CheckReport {
  std::string check;
  bool ok = false;
  double worst_value = 0.0;
  double bound = 1.0;  // 1 for e-checks, the level epsilon for p-checks
  double tolerance = 0.0;
  Witness witness;
  bool inf_times_zero = false;
  bool converged = true;
  std::string note;
};

struct OracleOptions {
  double tol_exch = 1e-9;  // exchangeability checks: exact enumeration, float slack only
  double tol_iid = 1e-6;   // IID checks: absorbs optimizer slack
  std::uint64_t budget = kDefaultBudget;
  SimplexMaxOptions simplex;
};

// E in EX: orbit mean <= 1 for every bag; worst bag returned.
CheckReport check_e_exchangeable(const FnTable& table, const OracleOptions& opt = {});

// E in ER: sup over the Q-simplex of the IID expectation <= 1.
CheckReport check_e_iid(const FnTable& table, const OracleOptions& opt = {});

// P in PX: for every bag and every realized level eps, the orbit
// fraction of {P <= eps} is at most eps.
CheckReport check_p_exchangeable(const FnTable& table, const OracleOptions& opt = {});

// P in PR: for every level in (the realized values union eps_grid),
// sup_Q Q^N(P <= eps) <= eps.
CheckReport check_p_iid(const FnTable& table, const std::vector<double>& eps_grid = {},
                        const OracleOptions& opt = {});

// Exact equality under all permutations of the training positions
// (test slot fixed) resp. of all n+1 positions.
bool check_train_invariant(const FnTable& table);
bool check_fully_invariant(const FnTable& table);

// G = G(z_1..z_n | z_{n+1}) stored with the conditioning test
// observation in the last slot: for every sequence the mean of G over
// the n! training permutations is <= 1.
CheckReport check_test_conditional(const FnTable& cond_table, const OracleOptions& opt = {});

// Membership check for any ClassLabel (composes invariance checks with
// the family check where needed).
CheckReport check_class(ClassLabel label, const FnTable& table, const OracleOptions& opt = {});

}  // namespace cplab
