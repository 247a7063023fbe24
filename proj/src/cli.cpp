#include "cyclerep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <sstream>

#include "cyclerep/document.hpp"
#include "cyclerep/equivalence.hpp"
#include "cyclerep/generator.hpp"
#include "cyclerep/oracle.hpp"
#include "cyclerep/regularize.hpp"
#include "cyclerep/similarity.hpp"

namespace cyclerep::cli {
namespace {

std::string tuple_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

void print_chains(std::ostream& out, const std::vector<ChainSummand>& chains, const char* indent = "  ") {
  if (chains.empty()) out << indent << "(none)\n";
  for (const auto& c : chains) out << indent << "end " << c.end_vertex << ", length " << c.length << ", x" << c.multiplicity << '\n';
}

template <ExactField F>
Json invariant_factors_json(const InvariantFactors<F>& inv) {
  Json out = Json::array();
  for (const auto& p : inv.factors) out.push_back(poly_to_json(p));
  return out;
}

template <ExactField F>
std::string invariant_factors_text(const InvariantFactors<F>& inv) {
  if (inv.factors.empty()) return "(none)";
  std::string s;
  for (const auto& p : inv.factors) s += (s.empty() ? "" : " | ") + p.str();
  return s;
}

/// Loads and validates; prints diagnostics and returns nullopt on shape errors.
template <ExactField F>
std::optional<Cycle<F>> load_valid(const Json& doc, const std::string& path, std::ostream& err) {
  auto c = cycle_from_json<F>(doc, path);
  const auto rep = validate(c);
  if (rep.ok()) return c;
  for (const auto& e : rep.errors) err << path << ": " << e << '\n';
  return std::nullopt;
}

/// Calls fn.template operator()<F>() with F chosen by the document's field.
template <class Fn>
int with_field(const std::string& field, Fn&& fn) {
  if (field == Rational::kFieldName) return fn.template operator()<Rational>();
  return fn.template operator()<GaussianRational>();
}

struct DecomposeOptions {
  std::string path;
  std::string out;
  std::string canonical_out;
  std::string witness_out;
  std::optional<std::size_t> jmax;
  bool verify = false;
};

template <ExactField F>
int decompose(const Json& doc, const DecomposeOptions& o, std::ostream& out, std::ostream& err) {
  const auto c = load_valid<F>(doc, o.path, err);
  if (!c) return kInvalid;
  const auto d = regularizing_decomposition(*c, o.jmax);
  const auto product = product_operator(d.regular_part);
  const auto inv = poly_smith(product);

  Json table = Json::array();
  for (const auto& row : d.table.k) table.push_back(row);
  Json report;
  report["format_version"] = std::string(kFormatVersion);
  report["kind"] = "decomposition";
  report["field"] = std::string(F::kFieldName);
  report["t"] = c->t;
  report["dims"] = c->dims;
  report["stabilization_exponent"] = d.z;
  report["jmax"] = d.table.jmax;
  report["regular_dims"] = d.regular_part.dims;
  report["regular_product"] = matrix_to_json(product);
  report["invariant_factors"] = invariant_factors_json(inv);
  report["chains"] = chains_to_json(d.chains);
  report["kernel_table"] = std::move(table);
  report["canonical"] = cycle_to_json(d.canonical);
  report["witness"] = system_to_json(d.witness);

  out << "cycle: t=" << c->t << " dims=" << tuple_str(c->dims) << " field=" << F::kFieldName << '\n';
  out << "stabilization exponent z = " << d.z << '\n';
  out << "regular part dims: " << tuple_str(d.regular_part.dims) << '\n';
  out << "regular product invariant factors: " << invariant_factors_text(inv) << '\n';
  out << "chains (end vertex, length, multiplicity):\n";
  print_chains(out, d.chains);
  out << "witness (canonical -> input): verified\n";

  if (o.verify) {
    if (c->total_dim() > oracle::kDefaultBound) {
      out << "verify: skipped, total dimension " << c->total_dim() << " exceeds oracle bound " << oracle::kDefaultBound << '\n';
    } else {
      const auto peeled = oracle::peel_chains_bruteforce(*c);
      const bool sigma_ok = oracle::verify_sigma_identity(d.table);
      if (peeled != d.chains || !sigma_ok) {
        err << "verify: brute-force oracle disagrees with the decomposition\n";
        return kInternal;
      }
      out << "verify: brute-force chain peeling and sigma identity agree\n";
    }
  }
  if (!o.out.empty()) write_json_file(o.out, report);
  if (!o.canonical_out.empty()) write_json_file(o.canonical_out, cycle_to_json(d.canonical));
  if (!o.witness_out.empty()) write_json_file(o.witness_out, system_to_json(d.witness));
  return kOk;
}

struct CompareOptions {
  std::string path_a;
  std::string path_b;
  std::string mode = "iso";
  std::string out;
  std::string witness_out;
};

template <ExactField F>
int compare(const Json& da, const Json& db, const CompareOptions& o, std::ostream& out, std::ostream& err) {
  const auto a = load_valid<F>(da, o.path_a, err);
  const auto b = load_valid<F>(db, o.path_b, err);
  if (!a || !b) return kInvalid;
  Json report;
  report["format_version"] = std::string(kFormatVersion);
  report["kind"] = "comparison";
  report["field"] = std::string(F::kFieldName);
  report["mode"] = o.mode;
  std::optional<TransformationSystem<F>> witness;
  int code = kFalse;

  if (o.mode == "iso") {
    const bool iso = a->t == b->t && is_isomorphic(*a, *b);
    report["isomorphic"] = iso;
    out << "isomorphic: " << (iso ? "true" : "false") << '\n';
    if (iso) {
      witness = isomorphism_witness(*a, *b);
      report["witness"] = system_to_json(*witness);
      out << "witness: verified\n";
      code = kOk;
    }
  } else {
    const auto rep = topological_reduction(*a, *b);
    report["verdict"] = verdict_name(rep.verdict);
    report["reason"] = rep.reason;
    report["dims_match"] = rep.dims_match;
    report["singular_match"] = rep.singular_match;
    report["singular_chains_a"] = chains_to_json(rep.singular_chains_a);
    report["singular_chains_b"] = chains_to_json(rep.singular_chains_b);
    report["product_a"] = matrix_to_json(rep.product_a);
    report["product_b"] = matrix_to_json(rep.product_b);
    out << "verdict: " << verdict_name(rep.verdict) << " (" << rep.reason << ")\n";
    if (rep.witness) {
      witness = rep.witness;
      report["witness"] = system_to_json(*rep.witness);
    }
    if (rep.verdict == Verdict::ReducedToOperatorPair) {
      out << "P = " << rep.product_a << "\nQ = " << rep.product_b << '\n';
      code = kUndecided;
    } else {
      code = rep.verdict == Verdict::Equivalent ? kOk : kFalse;
    }
  }
  if (!o.out.empty()) write_json_file(o.out, report);
  if (!o.witness_out.empty()) {
    if (witness) write_json_file(o.witness_out, system_to_json(*witness));
    else out << "no witness written\n";
  }
  return code;
}

template <ExactField F>
int check_witness(const Json& da, const Json& db, const Json& dw, const std::vector<std::string>& paths, std::ostream& out) {
  const auto a = cycle_from_json<F>(da, paths[0]);
  const auto b = cycle_from_json<F>(db, paths[1]);
  const auto w = system_from_json<F>(dw, paths[2]);
  const auto chk = check_commutes(a, b, w);
  if (chk) {
    out << "witness ok: all " << a.t << " squares commute\n";
    return kOk;
  }
  out << "witness rejected";
  if (chk.failing_square != 0) out << " at square " << chk.failing_square;
  out << ": " << chk.reason << '\n';
  return kFalse;
}

struct GenOptions {
  std::size_t t = 1;
  std::string chains;
  std::size_t regular_size = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string field = "Q";
};

template <ExactField F>
int generate(const GenOptions& o, std::ostream& out, std::ostream& err) {
  GeneratorSpec<F> spec;
  spec.t = o.t;
  spec.chains = parse_chain_list(o.chains, o.t);
  if (o.regular_size > 0) {
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    spec.regular_product = random_invertible<F>(o.regular_size, rng);
  }
  const auto gen = random_cycle(spec, o.seed);
  const auto d = regularizing_decomposition(gen.cycle);
  if (d.chains != gen.truth.chains || d.regular_part.dims != gen.truth.regular_dims ||
      !are_similar(product_operator(d.regular_part), gen.truth.regular_product)) {
    err << "gen: generated cycle does not decompose to its specification\n";
    return kInternal;
  }
  const Json doc = cycle_to_json(gen.cycle);
  if (o.out.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(o.out, doc);
    out << "wrote " << o.out << ": t=" << gen.cycle.t << " dims=" << tuple_str(gen.cycle.dims) << '\n';
  }
  return kOk;
}

}  // namespace

std::vector<ChainSummand> parse_chain_list(const std::string& text, std::size_t t) {
  std::vector<ChainSummand> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::size_t> parts;
    std::stringstream fields(item);
    std::string f;
    while (std::getline(fields, f, ':')) {
      if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("chain spec '" + item + "': expected l:j:mult with non-negative integers");
      parts.push_back(std::stoul(f));
    }
    if (parts.size() < 2 || parts.size() > 3) throw InvalidInput("chain spec '" + item + "': expected l:j:mult");
    const ChainSummand c{parts[0], parts[1], parts.size() == 3 ? parts[2] : 1};
    if (c.end_vertex < 1 || c.end_vertex > t)
      throw InvalidInput("chain spec '" + item + "': end vertex outside 1.." + std::to_string(t));
    if (c.multiplicity == 0) throw InvalidInput("chain spec '" + item + "': multiplicity must be positive");
    out.push_back(c);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose and compare oriented cycles of linear maps over Q and Q(i), exactly."};
  app.require_subcommand(1);

  std::string validate_path;
  auto* cmd_validate = app.add_subcommand("validate", "Check that a cycle document is well formed");
  cmd_validate->add_option("path", validate_path, "Cycle document")->required();

  DecomposeOptions dec;
  std::size_t jmax = 0;
  auto* cmd_decompose = app.add_subcommand("decompose", "Regular part, chain summands, invariants and witness");
  cmd_decompose->add_option("path", dec.path, "Cycle document")->required();
  cmd_decompose->add_option("--out", dec.out, "Write the structured report here");
  cmd_decompose->add_option("--canonical-out", dec.canonical_out, "Write the canonical direct sum as a cycle document");
  cmd_decompose->add_option("--witness-out", dec.witness_out, "Write the witness (canonical -> input)");
  auto* jmax_opt = cmd_decompose->add_option("--jmax", jmax, "Largest j in the kernel-dimension table (default: total dimension)");
  cmd_decompose->add_flag("--verify", dec.verify, "Cross-check against the brute-force oracle (small cycles)");

  CompareOptions cmp;
  auto* cmd_compare = app.add_subcommand("compare", "Decide isomorphism or reduce topological equivalence");
  cmd_compare->add_option("a", cmp.path_a, "First cycle")->required();
  cmd_compare->add_option("b", cmp.path_b, "Second cycle")->required();
  cmd_compare->add_option("--mode", cmp.mode, "iso or topo")->check(CLI::IsMember({"iso", "topo"}));
  cmd_compare->add_option("--out", cmp.out, "Write the structured report here");
  cmd_compare->add_option("--witness-out", cmp.witness_out, "Write the linear witness (a -> b) when one exists");

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a random cycle with a known decomposition");
  cmd_gen->add_option("--t", gen.t, "Cycle length")->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--chains", gen.chains, "Chain summands as l:j:mult,...");
  cmd_gen->add_option("--regular-size", gen.regular_size, "Dimension of the regular part");
  cmd_gen->add_option("--seed", gen.seed, "Random seed");
  cmd_gen->add_option("--out", gen.out, "Output path (default: standard output)");
  cmd_gen->add_option("--field", gen.field, "Q or Q(i)")->check(CLI::IsMember({"Q", "Q(i)"}));

  std::vector<std::string> check_paths;
  auto* cmd_check = app.add_subcommand("check-witness", "Check that a witness transforms cycle A to cycle B");
  cmd_check->add_option("paths", check_paths, "A B WITNESS")->required()->expected(3);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*cmd_validate) {
      const Json doc = read_json_file(validate_path);
      return with_field(document_field(doc, validate_path), [&]<class F>() {
        const auto c = load_valid<F>(doc, validate_path, err);
        if (!c) return static_cast<int>(kInvalid);
        out << validate_path << ": ok (t=" << c->t << ", dims=" << tuple_str(c->dims) << ", field=" << F::kFieldName << ")\n";
        return static_cast<int>(kOk);
      });
    }
    if (*cmd_decompose) {
      if (*jmax_opt) dec.jmax = jmax;
      const Json doc = read_json_file(dec.path);
      return with_field(document_field(doc, dec.path), [&]<class F>() { return decompose<F>(doc, dec, out, err); });
    }
    if (*cmd_compare) {
      const Json da = read_json_file(cmp.path_a);
      const Json db = read_json_file(cmp.path_b);
      const auto fa = document_field(da, cmp.path_a);
      if (fa != document_field(db, cmp.path_b)) {
        err << "compare: the two cycles are over different fields\n";
        return kInvalid;
      }
      return with_field(fa, [&]<class F>() { return compare<F>(da, db, cmp, out, err); });
    }
    if (*cmd_gen) {
      return with_field(gen.field, [&]<class F>() { return generate<F>(gen, out, err); });
    }
    if (*cmd_check) {
      const Json da = read_json_file(check_paths[0]);
      const Json db = read_json_file(check_paths[1]);
      const Json dw = read_json_file(check_paths[2]);
      const auto f = document_field(da, check_paths[0]);
      if (f != document_field(db, check_paths[1]) || f != document_field(dw, check_paths[2])) {
        err << "check-witness: documents are over different fields\n";
        return kInvalid;
      }
      return with_field(f, [&]<class F>() { return check_witness<F>(da, db, dw, check_paths, out); });
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {  // ParseError, InvalidInput, DimensionError
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {  // NotInvertibleError and friends
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace cyclerep::cli
