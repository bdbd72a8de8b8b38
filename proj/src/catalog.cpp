/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "darboux/error.hpp"
#include "darboux/evaluations.hpp"
#include "json.hpp"

#ifndef DARBOUX_DEFAULT_CATALOG
#define DARBOUX_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace darboux {

using ojson = nlohmann::ordered_json;

namespace {

Rational rat(const ojson &j, const std::string &what) {
  if (!j.is_string()) throw ParseError(what + ": rationals are written as \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

std::array<Rational, 3> triple(const ojson &j, const std::string &what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(what + ": expected three rationals");
  return {rat(j[0], what), rat(j[1], what), rat(j[2], what)};
}

const ojson &field(const ojson &j, const char *key, const std::string &id) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("record " + id + ": missing \"" + key + "\"");
  return *it;
}

EvaluationRecord record_from_json(const ojson &j) {
  if (!j.is_object()) throw ParseError("record is not an object");
  EvaluationRecord r;
  r.id = field(j, "id", "?").get<std::string>();
  auto t = triple(field(j, "type", r.id), r.id + " type");
  r.type = {t[0], t[1], t[2]};
  auto p = triple(field(j, "params", r.id), r.id + " params");
  r.params = {p[0], p[1], p[2]};
  r.covering = field(j, "covering", r.id).get<std::string>();
  const ojson &rhs = field(j, "rhs", r.id);
  r.rhs.constant = rhs.contains("constant") ? rat(rhs["constant"], r.id + " constant") : Rational(1);
  for (const auto &f : field(rhs, "factors", r.id)) {
    r.rhs.factors.push_back({field(f, "poly", r.id).get<std::string>(), rat(field(f, "exp", r.id), r.id + " exp")});
  }
  if (j.contains("notes")) r.notes = j["notes"].get<std::string>();
  return r;
}

ojson record_to_json(const EvaluationRecord &r) {
  ojson j;
  j["id"] = r.id;
  j["type"] = {r.type.e0.str(), r.type.e1.str(), r.type.einf.str()};
  j["params"] = {r.params.A.str(), r.params.B.str(), r.params.C.str()};
  j["covering"] = r.covering;
  ojson factors = ojson::array();
  for (const auto &f : r.rhs.factors) factors.push_back({{"poly", f.poly}, {"exp", f.exp.str()}});
  j["rhs"] = {{"constant", r.rhs.constant.str()}, {"factors", factors}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace

RadicalFunction EvaluationRecord::rhs_function() const {
  const WeierstrassCurve *e = darboux::covering(covering).curve;
  RadicalFunction out;
  out.constant = rhs.constant;
  for (const auto &f : rhs.factors) out.times(CurveFunction::parse(e, f.poly), f.exp);
  return out;
}

void check_record(const EvaluationRecord &r) {
  if (r.id.empty()) throw ParseError("record without id");
  r.params.validate();
  (void)covering(r.covering);
  if (classify_schwartz(exponent_diffs(r.params)) != classify_schwartz(r.type)) {
    throw ClassificationError(r.id + ": parameters " + r.params.str() + " are not of type " + r.type.str());
  }
}

Catalog::Catalog(std::vector<EvaluationRecord> records) {
  for (auto &r : records) add(std::move(r));
}

Catalog Catalog::parse(const std::string &text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error &e) {
    throw ParseError(std::string("catalog: ") + e.what());
  }
  if (!j.is_object() || !j.contains("records")) throw ParseError("catalog: missing \"records\"");
  Catalog c;
  for (const auto &r : j["records"]) {
    EvaluationRecord rec = record_from_json(r);
    check_record(rec);
    c.add(std::move(rec));
  }
  return c;
}

Catalog Catalog::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Catalog::dump() const {
  ojson j;
  j["version"] = 1;
  j["records"] = ojson::array();
  for (const auto &r : records_) j["records"].push_back(record_to_json(r));
  return j.dump(1) + "\n";
}

void Catalog::save(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write catalog " + path);
  out << dump();
}

const EvaluationRecord *Catalog::find(const std::string &id) const {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const EvaluationRecord &r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

const EvaluationRecord &Catalog::at(const std::string &id) const {
  const EvaluationRecord *r = find(id);
  if (!r) throw ParameterError("no record " + id);
  return *r;
}

void Catalog::add(EvaluationRecord r) {
  if (find(r.id)) throw ParameterError("duplicate record " + r.id);
  records_.push_back(std::move(r));
}

Catalog Catalog::without(const std::string &id) const {
  Catalog c;
  for (const auto &r : records_) {
    if (r.id != id) c.records_.push_back(r);
  }
  return c;
}

std::string default_catalog_path() {
  if (const char *env = std::getenv("DARBOUX_CATALOG"); env && *env) return env;
  return DARBOUX_DEFAULT_CATALOG;
}

const Catalog &shipped_catalog() {
  static const Catalog c = Catalog::load(DARBOUX_DEFAULT_CATALOG);
  return c;
}

VerificationReport verify(const EvaluationRecord &rec, int order) {
  return verify(rec, covering(rec.covering), order);
}

VerificationReport verify(const EvaluationRecord &rec, const Covering &c, int order) {
  if (order < 0) throw ParameterError("negative verification order");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = rec.id;
  rep.order = order;
  const int rb = c.elliptic() ? 2 : 1;
  QSeries phi = expand_at_base(c.map, std::max(order, 1));
  if (phi.is_zero() || phi.valuation() <= 0) {
    throw BasePointError(c.key + " does not vanish at the base point");
  }
  QSeries lhs = QSeries::compose(gauss_series(rec.params, order), phi).truncated(order + 1);
  QSeries rhs = expand_at_base(rec.rhs_function(), order);
  int r = 1;
  if (auto e = QSeries::first_mismatch(lhs, rhs, &r)) {
    // s-units of the common ramification back to t
    const int per_t = r / rb;
    rep.mismatch_index = *e >= 0 ? *e / per_t : -((-*e + per_t - 1) / per_t);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> verify_all(const Catalog &c, int order, unsigned threads) {
  const auto &recs = c.records();
  std::vector<VerificationReport> out(recs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(recs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < recs.size(); i = next++) {
      try {
        out[i] = verify(recs[i], order);
      } catch (const std::exception &e) {
        out[i].id = recs[i].id;
        out[i].order = order;
        out[i].error = e.what();
      }
    }
  };
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto &t : pool) t.join();
  return out;
}

}  // namespace darboux
