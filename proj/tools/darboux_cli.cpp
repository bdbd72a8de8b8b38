/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "darboux/covering.hpp"
#include "darboux/error.hpp"
#include "darboux/evaluations.hpp"
#include "json.hpp"

using namespace darboux;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::array<Rational, 3> parse_triple(const std::string &s, const std::string &flag) {
  std::array<Rational, 3> out;
  std::stringstream ss(s);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) break;
    try {
      out[static_cast<std::size_t>(n)] = Rational::parse(part);
    } catch (const Error &e) {
      throw UsageError(flag + ": " + e.what());
    }
    ++n;
  }
  if (n != 3 || ss.rdbuf()->in_avail() > 0) throw UsageError(flag + ": expected three rationals a,b,c");
  return out;
}

ojson json_array(const std::array<Rational, 3> &a) { return {a[0].str(), a[1].str(), a[2].str()}; }

ojson report_json(const VerificationReport &r) {
  ojson j;
  j["id"] = r.id;
  j["ok"] = r.ok();
  j["order"] = r.order;
  if (r.mismatch_index) j["mismatch_index"] = *r.mismatch_index;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string report_text(const VerificationReport &r) {
  std::ostringstream os;
  os << r.id << ": ";
  if (!r.error.empty()) {
    os << "error: " << r.error;
  } else if (r.mismatch_index) {
    os << "FAIL, first mismatch at t^" << *r.mismatch_index;
  } else {
    os << "ok through t^" << r.order;
  }
  return os.str();
}

std::string partition_str(const Partition &p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string record_text(const EvaluationRecord &r) {
  std::ostringstream os;
  os << r.id << ": 2F1(" << r.params.A << ", " << r.params.B << "; " << r.params.C << "; " << r.covering << ") = ";
  bool first = true;
  if (r.rhs.constant != Rational(1) || r.rhs.factors.empty()) {
    os << r.rhs.constant;
    first = false;
  }
  for (const auto &f : r.rhs.factors) {
    os << (first ? "" : " * ") << "(" << f.poly << ")";
    if (f.exp != Rational(1)) os << "^(" << f.exp << ")";
    first = false;
  }
  return os.str();
}

std::string group_name(MonodromyGroup g) {
  switch (g) {
    case MonodromyGroup::Cyclic: return "cyclic";
    case MonodromyGroup::Dihedral: return "dihedral";
    case MonodromyGroup::Tetrahedral: return "tetrahedral";
    case MonodromyGroup::Octahedral: return "octahedral";
    case MonodromyGroup::Icosahedral: return "icosahedral";
    case MonodromyGroup::Infinite: return "infinite";
  }
  return "?";
}

bool same_file(const std::string &a, const std::string &b) {
  namespace fs = std::filesystem;
  std::error_code ec1, ec2;
  return fs::weakly_canonical(a, ec1) == fs::weakly_canonical(b, ec2) && !ec1 && !ec2;
}

struct Options {
  bool json = false;
  std::string catalog;
  std::string id, params, diffs, target, out, curve_key, function, point, covering_key;
  int order = kDefaultVerifyOrder;
  int derived_order = kDerivedVerifyOrder;
  int bound = 16;
  unsigned threads = 0;
  bool dramifico = false;
};

Catalog load_catalog(const Options &o) {
  return Catalog::load(o.catalog.empty() ? default_catalog_path() : o.catalog);
}

int emit(const Options &o, const ojson &j, const std::string &text, int code) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

int cmd_verify(const Options &o) {
  Catalog c = load_catalog(o);
  const EvaluationRecord *r = c.find(o.id);
  if (!r) throw UsageError("--id: no record " + o.id);
  VerificationReport rep = verify(*r, o.order);
  return emit(o, report_json(rep), report_text(rep) + "\n", rep.ok() ? kOk : kFail);
}

int cmd_verify_all(const Options &o) {
  Catalog c = load_catalog(o);
  auto reps = verify_all(c, o.order, o.threads);
  int passed = 0;
  ojson arr = ojson::array();
  std::string text;
  for (const auto &r : reps) {
    passed += r.ok();
    arr.push_back(report_json(r));
    text += report_text(r) + "\n";
  }
  text += std::to_string(passed) + "/" + std::to_string(reps.size()) + " verified at order " +
          std::to_string(o.order) + "\n";
  ojson j;
  j["order"] = o.order;
  j["passed"] = passed;
  j["total"] = reps.size();
  j["reports"] = arr;
  return emit(o, j, text, passed == static_cast<int>(reps.size()) ? kOk : kFail);
}

int cmd_classify(const Options &o) {
  if (o.params.empty() == o.diffs.empty()) throw UsageError("classify: give exactly one of --params, --diffs");
  ExponentDiffs e;
  if (!o.params.empty()) {
    auto p = parse_triple(o.params, "--params");
    e = exponent_diffs({p[0], p[1], p[2]});
  } else {
    auto d = parse_triple(o.diffs, "--diffs");
    e = {d[0], d[1], d[2]};
  }
  ojson j;
  j["diffs"] = json_array(e.as_array());
  SchwartzType t;
  try {
    t = classify_schwartz(e);
  } catch (const ClassificationError &err) {
    j["type"] = nullptr;
    j["error"] = err.what();
    return emit(o, j, std::string("no finite Schwartz type: ") + err.what() + "\n", kFail);
  }
  const MonodromyGroup g = monodromy_group(t);
  j["type"] = type_label(t);
  j["group"] = group_name(g);
  std::string text = "exponent differences " + e.str() + ": type " + type_label(t);
  if (type_label(t) != group_name(g)) text += ", " + group_name(g);
  if (g == MonodromyGroup::Tetrahedral || g == MonodromyGroup::Octahedral || g == MonodromyGroup::Icosahedral) {
    j["representative"] = json_array(representative(t).as_array());
    j["group_order"] = group_order(t);
    text += " of order " + std::to_string(group_order(t));
  }
  return emit(o, j, text + "\n", kOk);
}

int cmd_derive(const Options &o) {
  Catalog c = load_catalog(o);
  const EvaluationRecord *base = c.find(o.id);
  if (!base) throw UsageError("--base: no record " + o.id);
  auto t = parse_triple(o.target, "--target");
  EvaluationRecord d = derive_contiguous({t[0], t[1], t[2]}, *base, o.derived_order);
  ojson j;
  j["record"] = ojson::parse(Catalog({d}).dump())["records"][0];
  std::string text = record_text(d) + "\nverified at order " + std::to_string(o.derived_order) + "\n";
  if (!o.out.empty()) {
    const std::string shipped = o.catalog.empty() ? default_catalog_path() : o.catalog;
    if (same_file(o.out, shipped) || same_file(o.out, DARBOUX_DEFAULT_CATALOG)) {
      throw UsageError("--out: derived records are never written into the shipped catalog");
    }
    Catalog user = std::filesystem::exists(o.out) ? Catalog::load(o.out) : Catalog();
    if (const EvaluationRecord *old = user.find(d.id)) {
      if (!(*old == d)) throw UsageError("--out: " + o.out + " already holds a different " + d.id);
    } else {
      user.add(d);
    }
    user.save(o.out);
    j["written"] = o.out;
    text += "written to " + o.out + "\n";
  }
  return emit(o, j, text, kOk);
}

int cmd_divisor(const Options &o) {
  ojson j;
  QDivisor d;
  std::string what;
  if (!o.id.empty()) {
    Catalog c = load_catalog(o);
    const EvaluationRecord *r = c.find(o.id);
    if (!r) throw UsageError("--id: no record " + o.id);
    d = radical_divisor(r->rhs_function());
    what = "rhs of " + r->id;
    j["id"] = r->id;
  } else {
    if (o.curve_key.empty() || o.function.empty()) throw UsageError("divisor: give --id, or --curve and --function");
    const WeierstrassCurve *e = o.curve_key == "P1" ? nullptr : &curve(o.curve_key);
    d = principal_divisor(CurveFunction::parse(e, o.function));
    what = o.function;
    j["curve"] = o.curve_key;
    j["function"] = o.function;
  }
  j["divisor"] = d.str();
  j["degree"] = d.degree().str();
  return emit(o, j, "div(" + what + ") = " + d.str() + "\n", kOk);
}

int cmd_torsion(const Options &o) {
  const WeierstrassCurve &e = curve(o.curve_key);
  QPoint p = QPoint::infinity();
  if (o.point != "O") {
    const auto comma = o.point.find(',');
    if (comma == std::string::npos) throw UsageError("--point: expected x,xi or O");
    try {
      p = QPoint::affine(Rational::parse(o.point.substr(0, comma)), Rational::parse(o.point.substr(comma + 1)));
    } catch (const Error &err) {
      throw UsageError(std::string("--point: ") + err.what());
    }
  }
  if (!on_curve(e, p)) throw UsageError("--point: " + p.str() + " is not on " + o.curve_key);
  auto ord = order_of(e, p, o.bound);
  ojson j;
  j["curve"] = o.curve_key;
  j["point"] = p.str();
  j["bound"] = o.bound;
  j["order"] = ord ? ojson(*ord) : ojson(nullptr);
  std::string text = p.str() + " on " + o.curve_key + ": " +
                     (ord ? "order " + std::to_string(*ord) : "non-torsion within bound " + std::to_string(o.bound));
  return emit(o, j, text + "\n", kOk);
}

int cmd_genus_table(const Options &o) {
  ojson rows = ojson::array();
  std::ostringstream os;
  os << std::left << std::setw(14) << "denominators" << std::setw(16) << "type" << std::setw(7) << "klein"
     << "m  l  k  1\n";
  for (const auto &r : genus_table()) {
    const MonodromyGroup g = monodromy_group(r.type);
    const std::vector<int> den = g == MonodromyGroup::Tetrahedral  ? std::vector<int>{2, 3, 3}
                                 : g == MonodromyGroup::Octahedral ? std::vector<int>{2, 3, 4}
                                                                   : std::vector<int>{2, 3, 5};
    const std::string dens = std::to_string(den[0]) + ", " + std::to_string(den[1]) + ", " + std::to_string(den[2]);
    const std::string label = type_label(r.type);
    os << std::left << std::setw(14) << dens << std::setw(16) << label << std::setw(7) << r.klein_degree;
    for (int c : r.genus) os << std::setw(3) << c;
    os << "\n";
    ojson j;
    j["type"] = label;
    j["denominators"] = den;
    j["klein_degree"] = r.klein_degree;
    j["genus"] = {r.genus[0], r.genus[1], r.genus[2], r.genus[3]};
    rows.push_back(j);
  }
  ojson j;
  j["columns"] = {"m", "l", "k", "1"};
  j["rows"] = rows;
  return emit(o, j, os.str(), kOk);
}

int cmd_branching(const Options &o) {
  const Covering &c = covering(o.covering_key);
  std::array<Partition, 3> parts;
  for (std::size_t i = 0; i < 3; ++i) parts[i] = branching_data(c, kBaseValues[i]);
  const auto placed = placement(parts);
  ojson j;
  j["covering"] = c.key;
  j["degree"] = c.degree;
  std::ostringstream os;
  os << c.key << " (degree " << c.degree << (c.elliptic() ? ", on " + c.curve->name : "") << ")\n";
  bool all = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string v = base_value_str(kBaseValues[i]);
    os << "  above " << v << ": " << partition_str(parts[i]);
    j["fibers"][v] = parts[i];
    if (o.dramifico) {
      const bool ok = check_dramifico(c, kBaseValues[i], placed[i]);
      all = all && ok;
      os << "  dramifico k=" << placed[i] << " " << partition_str(dramifico_partition(c.degree, placed[i])) << ": "
         << (ok ? "ok" : "FAIL");
      j["dramifico"][v] = {{"k", placed[i]}, {"ok", ok}};
    }
    os << "\n";
  }
  const int g = hurwitz_genus(c.degree, 0, {parts[0], parts[1], parts[2]});
  os << "  genus by Hurwitz: " << g << "\n";
  j["genus"] = g;
  return emit(o, j, os.str(), all ? kOk : kFail);
}

}  // namespace

int main(int argc, char **argv) {
  Options o;
  CLI::App app{"Darboux evaluations of algebraic Gauss hypergeometric functions"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit one JSON document");
  app.add_option("--catalog", o.catalog, "Catalog file (default: $DARBOUX_CATALOG or the bundled catalog)");

  auto *verify_cmd = app.add_subcommand("verify", "Verify one catalog record by series expansion");
  verify_cmd->add_option("--id", o.id, "Record id")->required();
  verify_cmd->add_option("--order", o.order, "Order in t")->check(CLI::NonNegativeNumber);

  auto *all_cmd = app.add_subcommand("verify-all", "Verify every catalog record");
  all_cmd->add_option("--order", o.order, "Order in t")->check(CLI::NonNegativeNumber);
  all_cmd->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");

  auto *classify_cmd = app.add_subcommand("classify", "Schwartz type of parameters or exponent differences");
  classify_cmd->add_option("--params", o.params, "A,B,C");
  classify_cmd->add_option("--diffs", o.diffs, "e0,e1,einf");

  auto *derive_cmd = app.add_subcommand("derive", "Derive a contiguous evaluation from a catalog record");
  derive_cmd->add_option("--base", o.id, "Base record id")->required();
  derive_cmd->add_option("--target", o.target, "Target parameters A,B,C")->required();
  derive_cmd->add_option("--out", o.out, "User catalog file to append to");
  derive_cmd->add_option("--order", o.derived_order, "Verification order of the result")
      ->check(CLI::NonNegativeNumber);

  auto *divisor_cmd = app.add_subcommand("divisor", "Principal divisor of a function, or of a record's rhs");
  divisor_cmd->add_option("--curve", o.curve_key, "E3..E6, or P1");
  divisor_cmd->add_option("--function", o.function, "Polynomial expression in x and xi");
  divisor_cmd->add_option("--id", o.id, "Record id");

  auto *torsion_cmd = app.add_subcommand("torsion", "Order of a rational point");
  torsion_cmd->add_option("--curve", o.curve_key, "E3..E6")->required();
  torsion_cmd->add_option("--point", o.point, "x,xi or O")->required();
  torsion_cmd->add_option("--bound", o.bound, "Largest order tried")->check(CLI::PositiveNumber);

  app.add_subcommand("genus-table", "Genus of Darboux curves");

  auto *branching_cmd = app.add_subcommand("branching", "Branching data of a registered covering");
  branching_cmd->add_option("--covering", o.covering_key, "Covering key")->required();
  branching_cmd->add_flag("--dramifico", o.dramifico, "Check the ramification lemma at each base value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "verify") return cmd_verify(o);
    if (name == "verify-all") return cmd_verify_all(o);
    if (name == "classify") return cmd_classify(o);
    if (name == "derive") return cmd_derive(o);
    if (name == "divisor") return cmd_divisor(o);
    if (name == "torsion") return cmd_torsion(o);
    if (name == "genus-table") return cmd_genus_table(o);
    if (name == "branching") return cmd_branching(o);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
