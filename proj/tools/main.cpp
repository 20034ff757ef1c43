#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fps/identities.hpp"
#include "fps/inversion.hpp"
#include "fps/json_io.hpp"
#include "fps/partitions.hpp"
#include "fps/series.hpp"
#include "fps/stirling.hpp"

namespace {

using namespace fps;

// Named ids accepted by --f. "exp" is accepted on top of the series
// catalog because the transform kernels need a nonzero constant term.
Series series_by_name(const std::string& name, int order,
                      const std::optional<Rational>& param) {
  if (name == "exp") {
    if (param.has_value()) throw UsageError("series 'exp' takes no parameter");
    return named_series("exp_minus_1", order) + Rational(1);
  }
  return named_series(name, order, param);
}

bool looks_like_named(const std::string& f) {
  static const std::set<std::string> names = {"exp_minus_1", "log1p",    "sin",
                                              "arcsin",      "geom",     "catalan_beta",
                                              "binomial_t",  "identity", "exp"};
  return names.count(f) > 0;
}

Series load_series_arg(const std::string& f, int order_if_named,
                       const std::optional<Rational>& param) {
  if (looks_like_named(f)) return series_by_name(f, order_if_named, param);
  if (param.has_value())
    throw UsageError("--param/--t only applies to the named series 'binomial_t'");
  return series_from_json(read_text_file(f));
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(Rational::parse(item));
  return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  return out;
}

StirlingKind kind_from_flag(int kind) {
  if (kind == 1) return StirlingKind::first_unsigned;
  if (kind == 2) return StirlingKind::second;
  throw UsageError("--kind must be 1 or 2");
}

int cmd_stirling(int kind_flag, const std::string& method, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw UsageError("need n >= k >= 0");
  const StirlingKind kind = kind_from_flag(kind_flag);
  auto recurrence = [&] { return stirling_recurrence(kind, n, k); };
  auto gf = [&] { return stirling_via_gf(kind, n, k); };
  auto partition = [&] { return stirling_partition_formula(kind, n - k, k); };
  auto shift = [&] { return stirling_shift(kind, k, n - k); };
  if (method == "recurrence") {
    std::cout << recurrence().get_str() << "\n";
  } else if (method == "gf") {
    std::cout << gf().get_str() << "\n";
  } else if (method == "partition") {
    if (k < 1) throw UsageError("the partition route needs k >= 1");
    std::cout << partition().get_str() << "\n";
  } else if (method == "shift") {
    if (k < 1 || n <= k) throw UsageError("the shift route needs n > k >= 1");
    std::cout << shift().get_str() << "\n";
  } else if (method == "all") {
    std::vector<Int> values;
    values.push_back(recurrence());
    if (k >= 1) values.push_back(gf());
    if (k >= 1) values.push_back(partition());
    if (k >= 1 && n > k) values.push_back(shift());
    bool agree = true;
    for (const auto& v : values) {
      std::cout << v.get_str() << "\n";
      if (v != values.front()) agree = false;
    }
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
  } else {
    throw UsageError("--method must be recurrence|gf|partition|shift|all");
  }
  return 0;
}

int cmd_coeff(const std::string& f, const std::optional<std::string>& param,
              int m, const std::optional<std::string>& t, bool poly_t) {
  if (m < 1) throw UsageError("--m must be >= 1");
  if (t.has_value() == poly_t)
    throw UsageError("pick exactly one of --t and --poly-t");
  std::optional<Rational> p;
  if (param.has_value()) p = Rational::parse(*param);
  const Series series = load_series_arg(f, m, p);
  if (poly_t) {
    const PolyT poly = coeff_pow_poly_t(series, m);
    std::string out = "{\"coeffs\":[";
    for (size_t j = 0; j < poly.coeffs().size(); ++j) {
      if (j) out += ",";
      out += "\"" + poly.coeffs()[j].str() + "\"";
    }
    std::cout << out << "]}\n";
  } else {
    const Rational exponent = Rational::parse(*t);
    if (m > series.order()) throw UsageError("--m exceeds the series order");
    std::cout << series_pow(series.truncated(m), exponent)[m].str() << "\n";
  }
  return 0;
}

int cmd_reverse(const std::optional<std::string>& in, const std::optional<std::string>& f,
                int order, bool check) {
  Series alpha = [&] {
    if (in.has_value()) return series_from_json(read_text_file(*in));
    if (!f.has_value()) throw UsageError("give either --in FILE or --f NAME with --order");
    if (order < 1) throw UsageError("--order must be >= 1 for a named series");
    return series_by_name(*f, order, std::nullopt);
  }();
  Series inverse = [&] {
    try {
      return series_reverse_full(alpha);
    } catch (const DomainError& e) {
      throw DomainError(std::string("not reversible: ") + e.what());
    }
  }();
  if (check) {
    const Series composed = series_compose(alpha, inverse);
    if (composed != named_series("identity", alpha.order()))
      throw ConsistencyError("reversion check failed: composition is " + composed.str());
  }
  std::cout << series_to_json(inverse) << "\n";
  return 0;
}

int cmd_transform(const std::string& f, const std::optional<std::string>& t,
                  const std::string& dir, const std::string& in,
                  const std::optional<std::string>& out_path) {
  if (dir != "fwd" && dir != "inv") throw UsageError("--dir must be fwd or inv");
  const RationalSequence input = sequence_from_json(read_text_file(in));
  if (input.offset != 1)
    throw UsageError("transform sequences use offset 1");
  std::string output;
  if (input.values.empty()) {
    output = sequence_to_json(input);
  } else {
    std::optional<Rational> param;
    if (t.has_value()) param = Rational::parse(*t);
    const int size = input.length();
    const Series base = load_series_arg(f, size - 1, param);
    if (base.order() < size - 1)
      throw UsageError("series order too small for a sequence of length " +
                       std::to_string(size));
    const auto direction =
        dir == "fwd" ? KernelDirection::forward : KernelDirection::inverse;
    const TransformKernel kernel = build_kernel(base, size, direction);
    output = sequence_to_json(transform_apply(kernel, input));
  }
  std::cout << output << "\n";
  if (out_path.has_value()) write_text_file(*out_path, output + "\n");
  return 0;
}

int cmd_selfinverse(const std::string& odd_csv, int order) {
  if (order < 0) throw UsageError("--order must be >= 0");
  const SelfInverseSeries completed =
      self_inverse_complete(parse_rational_csv(odd_csv), order);
  std::cout << join_rationals(completed.coeffs) << "\n";
  return 0;
}

int cmd_partitions(int n, bool count_only) {
  if (count_only) {
    std::cout << partition_count(n).get_str() << "\n";
    return 0;
  }
  for_each_multiplicity_vector(n, [](const MultiplicityVector& mv) {
    std::string line;
    for (size_t i = 0; i < mv.k.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(mv.k[i]);
    }
    std::cout << line << "\n";
  });
  return 0;
}

int cmd_verify(int max_n, std::uint64_t seed, const std::vector<std::string>& only,
               const std::optional<std::string>& json_path) {
  std::set<std::string> wanted(only.begin(), only.end());
  const auto& catalog = identity_catalog();
  for (const auto& id : wanted)
    if (std::find(catalog.begin(), catalog.end(), id) == catalog.end())
      throw UsageError("unknown identity id '" + id + "'");
  const SuiteReport report =
      run_suite(max_n, seed, wanted.empty() ? nullptr : &wanted);
  for (const auto& r : report.results) {
    if (r.pass) continue;
    std::cout << "FAIL " << r.identity_id << " {";
    bool first = true;
    for (const auto& [key, value] : r.parameters) {
      if (!first) std::cout << ", ";
      std::cout << key << "=" << value;
      first = false;
    }
    std::cout << "}: lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
  }
  std::map<std::string, std::pair<int, int>> by_id;
  for (const auto& r : report.results) {
    auto& [passed, total] = by_id[r.identity_id];
    if (r.pass) passed++;
    total++;
  }
  for (const auto& [id, counts] : by_id)
    std::cout << id << ": " << counts.first << "/" << counts.second << "\n";
  std::cout << "distinct identities: " << by_id.size() << "\n";
  std::cout << "checks: " << report.total << " total, " << report.passed << " passed, "
            << report.failed << " failed\n";
  std::cout << "elapsed: " << report.elapsed_ms << "ms\n";
  if (json_path.has_value()) write_text_file(*json_path, report_to_json(report) + "\n");
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact formal power series, sequence transforms and Stirling numbers"};
  app.require_subcommand(1);

  // stirling
  auto* stirling = app.add_subcommand("stirling", "Stirling numbers by independent routes");
  int kind_flag = 0;
  std::string method;
  int st_n = 0;
  int st_k = 0;
  stirling->add_option("--kind", kind_flag, "1 (first kind, unsigned) or 2 (second kind)")
      ->required();
  stirling->add_option("--method", method, "recurrence|gf|partition|shift|all")->required();
  stirling->add_option("n", st_n, "row index")->required();
  stirling->add_option("k", st_k, "column index")->required();

  // coeff
  auto* coeff = app.add_subcommand("coeff", "coefficient of f^t at x^m");
  std::string coeff_f;
  std::optional<std::string> coeff_param;
  std::optional<std::string> coeff_t;
  bool coeff_poly = false;
  int coeff_m = 0;
  coeff->add_option("--f", coeff_f, "named series or path to series JSON")->required();
  coeff->add_option("--param", coeff_param, "parameter for the named series binomial_t");
  coeff->add_option("--m", coeff_m, "coefficient index")->required();
  coeff->add_option("--t", coeff_t, "rational exponent");
  coeff->add_flag("--poly-t", coeff_poly, "emit the coefficient as a polynomial in t");

  // reverse
  auto* reverse = app.add_subcommand("reverse", "compositional inverse of a series");
  std::optional<std::string> rev_in;
  std::optional<std::string> rev_f;
  int rev_order = 0;
  bool rev_check = false;
  reverse->add_option("--in", rev_in, "path to series JSON");
  reverse->add_option("--f", rev_f, "named series");
  reverse->add_option("--order", rev_order, "truncation order for a named series");
  reverse->add_flag("--check", rev_check, "compose with the input and assert identity");

  // transform
  auto* transform = app.add_subcommand("transform", "triangular sequence transform");
  std::string tr_f;
  std::optional<std::string> tr_t;
  std::string tr_dir;
  std::string tr_in;
  std::optional<std::string> tr_out;
  transform->add_option("--f", tr_f, "named series or path to series JSON")->required();
  transform->add_option("--t", tr_t, "parameter for the named series binomial_t");
  transform->add_option("--dir", tr_dir, "fwd or inv")->required();
  transform->add_option("--in", tr_in, "path to sequence JSON")->required();
  transform->add_option("--out", tr_out, "optional output path");

  // selfinverse
  auto* selfinv = app.add_subcommand("selfinverse",
                                     "complete odd coefficients to a self-inverse series");
  std::string si_odd;
  int si_order = 0;
  selfinv->add_option("--odd", si_odd, "comma-separated a1,a3,a5,...");
  selfinv->add_option("--order", si_order, "number of coefficients to produce")->required();

  // partitions
  auto* partitions = app.add_subcommand("partitions", "multiplicity vectors of n");
  int pa_n = 0;
  bool pa_count = false;
  partitions->add_option("--n", pa_n, "the integer to partition")->required();
  partitions->add_flag("--count", pa_count, "print only the partition count");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  int ve_max_n = 8;
  std::uint64_t ve_seed = 42;
  std::vector<std::string> ve_only;
  std::optional<std::string> ve_json;
  verify->add_option("--max-n", ve_max_n, "size cap for every check (default 8)");
  verify->add_option("--seed", ve_seed, "seed for the randomized checks (default 42)");
  verify->add_option("--only", ve_only, "restrict to an identity id (repeatable)");
  verify->add_option("--json", ve_json, "write the full report as JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (stirling->parsed()) return cmd_stirling(kind_flag, method, st_n, st_k);
    if (coeff->parsed()) return cmd_coeff(coeff_f, coeff_param, coeff_m, coeff_t, coeff_poly);
    if (reverse->parsed()) return cmd_reverse(rev_in, rev_f, rev_order, rev_check);
    if (transform->parsed()) return cmd_transform(tr_f, tr_t, tr_dir, tr_in, tr_out);
    if (selfinv->parsed()) return cmd_selfinverse(si_odd, si_order);
    if (partitions->parsed()) return cmd_partitions(pa_n, pa_count);
    if (verify->parsed()) return cmd_verify(ve_max_n, ve_seed, ve_only, ve_json);
    std::cerr << "error: no subcommand given\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
