/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/contiguous.hpp"
#include "darboux/covering.hpp"
#include "darboux/curvefunc.hpp"
#include "darboux/hypergeom.hpp"

namespace darboux {

inline constexpr int kDefaultVerifyOrder = 25;
inline constexpr int kDerivedVerifyOrder = 15;

/// One factor poly^exp of a right-hand side, kept in its catalog spelling.
struct RhsFactor {
  std::string poly;
  Rational exp;
  friend bool operator==(const RhsFactor &, const RhsFactor &) = default;
};

struct RhsText {
  Rational constant{1};
  std::vector<RhsFactor> factors;
  friend bool operator==(const RhsText &, const RhsText &) = default;
};

/// 2F1(params; covering) = rhs on the covering's curve.
struct EvaluationRecord {
  std::string id;
  ExponentDiffs type;  // main representative of the Schwartz type
  HpgParams params;
  std::string covering;
  RhsText rhs;
  std::string notes;

  SchwartzType schwartz_type() const { return classify_schwartz(type); }
  /// Parses the factors on the covering's curve.
  RadicalFunction rhs_function() const;
  friend bool operator==(const EvaluationRecord &, const EvaluationRecord &) = default;
};

/// Type consistency and covering key; throws ParseError or ClassificationError.
void check_record(const EvaluationRecord &r);

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<EvaluationRecord> records);

  /// JSON text: {"version": 1, "records": [{id, type, params, covering, rhs: {constant, factors}}]}.
  static Catalog parse(const std::string &text);
  static Catalog load(const std::string &path);
  std::string dump() const;
  void save(const std::string &path) const;

  const std::vector<EvaluationRecord> &records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const EvaluationRecord *find(const std::string &id) const;
  const EvaluationRecord &at(const std::string &id) const;
  /// Appends; throws ParameterError on a duplicate id.
  void add(EvaluationRecord r);
  Catalog without(const std::string &id) const;

 private:
  std::vector<EvaluationRecord> records_;
};

/// DARBOUX_CATALOG if set, else the bundled file.
std::string default_catalog_path();
const Catalog &shipped_catalog();

struct VerificationReport {
  std::string id;
  int order = 0;
  std::optional<int> mismatch_index;  // in t = x (genus 0) or t = sqrt(x)
  std::string error;                  // set when the check could not run
  double seconds = 0;
  bool ok() const { return error.empty() && !mismatch_index; }
};

/// Compares 2F1(params; phi) with rhs as Puiseux series in t through t^order.
/// Throws BasePointError when the covering does not vanish at the base point.
VerificationReport verify(const EvaluationRecord &rec, int order = kDefaultVerifyOrder);
/// As verify, along an explicitly given covering.
VerificationReport verify(const EvaluationRecord &rec, const Covering &c, int order);
/// One report per record in catalog order; errors are recorded, not thrown.
/// threads = 0 uses the hardware concurrency.
std::vector<VerificationReport> verify_all(const Catalog &c, int order = kDefaultVerifyOrder, unsigned threads = 0);

/// rhs(target) / rhs(base) as a function on the curve: p(phi) + q(phi) R'/(R phi') with
/// F(target) = p F + q F(A+1) written through zF' = A(F(A+1) - F).
CurveFunction contiguous_ratio(const HpgParams &target, const EvaluationRecord &base);

/// Record for target obtained from base by contiguous relations. Zero shift returns base.
/// Throws ClassificationError on a type change, ParameterError on a non-integral shift,
/// DegeneratePathError when elimination hits an excluded parameter, and Error when the
/// result fails verification at check_order (skipped for check_order < 0).
EvaluationRecord derive_contiguous(const HpgParams &target, const EvaluationRecord &base,
                                   int check_order = kDerivedVerifyOrder);

/// Printed functions on a Darboux curve with known divisors.
const std::vector<std::string> &table_functions(const std::string &curve);

struct RadicalSolution {
  QDivisor divisor;
  RadicalFunction function;  // leading coefficient 1 at the base point
  int local_solution = 0;    // 1: F(phi); 2: phi^(1-C) F(A-C+1, B-C+1; 2-C; phi)
};

struct SearchResult {
  std::vector<QDivisor> candidates;
  std::vector<RadicalSolution> solutions;
  std::vector<std::string> diagnostics;
};

/// Candidate divisors of the scheme realised as products of powers of table functions, x and xi,
/// kept when the series at the base point matches one of the two local solutions up to a constant.
SearchResult radical_solution_search(const HpgParams &params, const Covering &c, const PullbackScheme &scheme,
                                     int budget = 1, int order = 20);

}  // namespace darboux
