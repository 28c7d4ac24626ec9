#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "entif/cli.hpp"
#include "entif/constructors.hpp"
#include "entif/errors.hpp"
#include "entif/feasibility.hpp"
#include "entif/frame_io.hpp"

namespace entif {

namespace {

using nlohmann::json;

std::string join(const std::vector<mpz_class>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + "]";
}

// Raw option values as typed, so metadata reproduces byte for byte.
struct Options {
  std::string dim;
  std::string count;
  std::string epsilon;
  std::string seed;
  std::string order;
  std::vector<std::string> params;
  std::string output;
  bool spark = false;
  bool as_json = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

long long to_integer(const std::string& what, const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be an integer, got '" + s + "'");
  }
}

std::size_t to_size(const std::string& what, const std::string& s) {
  const long long v = to_integer(what, s);
  if (v < 0) throw UsageError(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

double to_double(const std::string& what, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + " must be a number, got '" + s + "'");
  }
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + p + "'");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

struct Built {
  FrameMatrix frame;
  mpz_class scale = 1;
  std::vector<std::string> notes;
};

class Request {
 public:
  Request(const Options& o) : o_(o), params_(parse_params(o.params)) {}

  std::size_t dim() const {
    if (o_.dim.empty()) throw UsageError("--dim is required");
    used_["dim"] = o_.dim;
    return to_size("--dim", o_.dim);
  }
  std::size_t count() const {
    if (o_.count.empty()) throw UsageError("--count is required");
    used_["count"] = o_.count;
    return to_size("--count", o_.count);
  }
  bool has_count() const { return !o_.count.empty(); }
  std::optional<std::string> param(const std::string& key) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    used_[key] = it->second;
    return it->second;
  }
  long long int_param(const std::string& key, long long fallback) const {
    const auto v = param(key);
    if (!v) {
      used_[key] = std::to_string(fallback);
      return fallback;
    }
    return to_integer(key, *v);
  }
  double epsilon() const {
    const std::string e = o_.epsilon.empty() ? "0.1" : o_.epsilon;
    used_["epsilon"] = e;
    return to_double("--epsilon", e);
  }
  std::uint64_t seed() const {
    const std::string s = o_.seed.empty() ? "0" : o_.seed;
    used_["seed"] = s;
    return static_cast<std::uint64_t>(to_integer("--seed", s));
  }
  std::size_t order() const {
    if (o_.order.empty()) throw UsageError("--order is required");
    used_["order"] = o_.order;
    return to_size("--order", o_.order);
  }
  bool has_order() const { return !o_.order.empty(); }
  const std::map<std::string, std::string>& used() const { return used_; }

 private:
  const Options& o_;
  std::map<std::string, std::string> params_;
  mutable std::map<std::string, std::string> used_;
};

Built build(const std::string& kind, const Request& r) {
  Built b;
  if (kind == "two-dim") {
    const std::size_t n = r.has_count() ? r.count() : static_cast<std::size_t>(r.int_param("n", 1)) * 2;
    if (n % 2 != 0) {
      throw InfeasibleError(citations::kOddCount2d, "no ENTIF with an odd number of vectors exists in dimension 2");
    }
    b.frame = entif_2d(n / 2);
  } else if (kind == "three-dim") {
    const std::size_t n = r.count();
    const long long fallback = n % 3 == 0 ? 3 : 4;
    const long long family = r.int_param("family", fallback);
    if ((family != 3 && family != 4) || n % static_cast<std::size_t>(family) != 0) {
      throw UsageError("three-dim needs family 3 or 4 dividing --count");
    }
    b.frame = entif_3d(n / static_cast<std::size_t>(family), family == 3 ? ThreeDimFamily::kThree : ThreeDimFamily::kFour);
  } else if (kind == "simplex") {
    SimplexResult s = simplex_entif(r.dim());
    b.frame = std::move(s.frame);
    b.scale = s.certificate.result.scale;
  } else if (kind == "hadamard-truncate") {
    b.frame = hadamard_entif(r.dim(), r.has_order() ? r.order() : r.count());
  } else if (kind.rfind("gensqr-", 0) == 0 && kind.size() == 8 && kind[7] >= '1' && kind[7] <= '5') {
    const long long n = r.int_param("n", 1);
    const long long bb = r.int_param("b", 1);
    if (n < 1) throw UsageError("gensqr needs n >= 1");
    b.frame = gensqr(kind[7] - '0', static_cast<std::size_t>(n), static_cast<long>(bb));
  } else if (kind == "dim5-even") {
    const long long a = r.int_param("a", 1);
    const long long block = r.int_param("block", 8);
    if (block != 8 && block != 10) throw UsageError("dim5-even block must be 8 or 10");
    const Dim5Blocks blocks = dim5_even_blocks(static_cast<long>(a));
    b.frame = block == 8 ? blocks.a : blocks.b;
  } else if (kind == "gcd-adjoin") {
    const long long a = r.int_param("a", 1);
    const std::size_t n = r.count();
    if (n % 2 != 0) throw InfeasibleError("coin-problem-bound", "the 5 x 8 and 5 x 10 blocks only give even counts");
    const Dim5Blocks blocks = dim5_even_blocks(static_cast<long>(a));
    b.frame = gcd_adjoin(blocks.a, blocks.b, static_cast<std::int64_t>(n / 2));
  } else if (kind == "equal-norm") {
    b.frame = equal_norm_any(r.dim(), r.count());
  } else if (kind == "tight") {
    const std::size_t dim = r.dim();
    const std::size_t count = r.count();
    std::optional<mpz_class> p;
    if (auto v = r.param("p")) p = mpz_class(static_cast<long>(to_integer("p", *v)));
    b.frame = tight_any(dim, count, p);
  } else if (kind == "almost-tight") {
    AlmostTightRequest req;
    req.dim = r.dim();
    req.count = r.count();
    req.epsilon = r.epsilon();
    req.seed = r.seed();
    if (auto v = r.param("budget")) req.denominator_budget = mpz_class(static_cast<long>(to_integer("budget", *v)));
    AlmostTightResult res = almost_tight(req);
    b.frame = std::move(res.frame);
    b.scale = res.scale;
    std::ostringstream os;
    os.precision(12);
    os << "normalized bounds lower=" << res.lower << " upper=" << res.upper << " target=["
       << (1.0 - req.epsilon) * static_cast<double>(req.count) / static_cast<double>(req.dim) << ','
       << (1.0 + req.epsilon) * static_cast<double>(req.count) / static_cast<double>(req.dim)
       << "] error=" << res.certified_error;
    b.notes.push_back(os.str());
  } else if (kind == "sylvester") {
    b.frame = sylvester_hadamard(static_cast<unsigned>(r.int_param("k", 1)));
  } else if (kind == "paley") {
    const long long q = r.int_param("q", 3);
    if (q < 3) throw UsageError("paley needs a prime q = 3 mod 4");
    b.frame = paley_hadamard(static_cast<std::uint64_t>(q));
  } else {
    throw UsageError("unknown construction kind '" + kind + "'");
  }
  return b;
}

int emit(const FrameFile& file, const Options& o, const std::vector<std::string>& notes, std::ostream& out) {
  const FrameReport report = analyze(file.matrix, o.spark);
  out << (o.as_json ? format_report_json(report) : format_report(report)) << '\n';
  for (const auto& n : notes) out << n << '\n';
  if (!o.output.empty()) {
    write_frame_file(o.output, file);
  } else {
    out << to_csv(file.matrix);
  }
  return report.is_frame ? kExitOk : kExitNotFrame;
}

int cmd_construct(const std::string& kind, const Options& o, std::ostream& out) {
  const Request r(o);
  Built b = build(kind, r);
  FrameFile file;
  file.matrix = std::move(b.frame);
  file.metadata = FrameMetadata{kind, r.used(), b.scale};
  return emit(file, o, b.notes, out);
}

int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
  const FrameFile file = read_frame_file(path);
  const FrameReport report = analyze(file.matrix, o.spark);
  out << (o.as_json ? format_report_json(report) : format_report(report)) << '\n';
  return report.is_frame ? kExitOk : kExitNotFrame;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  const Request r(o);
  const std::size_t dim = r.dim();
  const std::size_t count = r.count();
  if (dim == 0 || count < dim) throw UsageError("feasible needs --count >= --dim >= 1");
  const FeasibilityVerdict v = entif_feasible(dim, count);
  if (o.as_json) {
    json doc = {{"dim", dim},
                {"count", count},
                {"status", to_string(v.status)},
                {"citation", v.citation},
                {"explanation", v.explanation}};
    if (v.witness) doc["witness"] = v.witness->to_string();
    out << doc.dump() << '\n';
  } else {
    out << dim << " x " << count << ": " << to_string(v.status) << " [" << v.citation << "] " << v.explanation << '\n';
    if (v.witness) out << "witness: " << v.witness->to_string() << '\n';
  }
  switch (v.status) {
    case Feasibility::kExists:
      return kExitOk;
    case Feasibility::kImpossible:
      return kExitImpossible;
    case Feasibility::kUnknown:
      return kExitUnknown;
  }
  return kExitFailure;
}

int cmd_hadamard(const Options& o, std::ostream& out) {
  const Request r(o);
  FrameFile file;
  file.matrix = hadamard(r.order());
  file.metadata = FrameMetadata{"hadamard", r.used(), 1};
  return emit(file, o, {}, out);
}

int cmd_adjoin(const std::string& mode, const std::vector<std::string>& inputs, const Options& o, std::ostream& out) {
  const Request r(o);
  FrameFile file;
  if (mode == "double") {
    if (inputs.size() != 1) throw UsageError("adjoin double takes one input");
    file.matrix = double_frame(read_frame_file(inputs[0]).matrix, mpz_class(static_cast<long>(r.int_param("c", 1))));
  } else if (mode == "h" || mode == "diag") {
    if (inputs.size() != 2) throw UsageError("adjoin " + mode + " takes two inputs");
    const FrameMatrix a = read_frame_file(inputs[0]).matrix;
    const FrameMatrix b = read_frame_file(inputs[1]).matrix;
    file.matrix = mode == "h" ? hadjoin(a, b) : diag_adjoin(a, b);
  } else {
    throw UsageError("adjoin mode must be h, diag or double");
  }
  file.metadata = FrameMetadata{"adjoin-" + mode, r.used(), 1};
  return emit(file, o, {}, out);
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--spark", o.spark, "Compute the spark");
  cmd->add_flag("--json", o.as_json, "Print the report as JSON");
  cmd->add_option("-o,--output", o.output, "Write the frame file (.csv for CSV, JSON otherwise)");
}

}  // namespace

std::string format_report(const FrameReport& r) {
  std::ostringstream os;
  os << "dim=" << r.dim << " count=" << r.count << " rank=" << r.rank << " frame=" << (r.is_frame ? "yes" : "no");
  if (r.tight_value) {
    os << " tight=" << r.tight_value->get_str();
  } else if (r.rows_orthogonal) {
    os << " tight=no eigen_diagonal=" << join(r.eigen_diagonal);
  } else {
    os << " tight=no";
  }
  os << " norm_sq=" << (r.equal_norm_sq ? r.equal_norm_sq->get_str() : std::string("unequal"));
  if (r.is_equiangular_signed) {
    os << " equiangular=" << r.angle_value->get_str();
  } else if (r.is_equiangular_modulus) {
    os << " equiangular=|" << r.angle_value->get_str() << '|';
  } else {
    os << " equiangular=no";
  }
  if (r.spark) os << " spark=" << *r.spark;
  os << " entif=" << (r.is_entif() ? "yes" : "no");
  return os.str();
}

std::string format_report_json(const FrameReport& r) {
  auto strings = [](const std::vector<mpz_class>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
  };
  auto opt = [](const std::optional<mpz_class>& x) { return x ? json(x->get_str()) : json(nullptr); };
  json doc = {{"dim", r.dim},
              {"count", r.count},
              {"rank", r.rank},
              {"is_frame", r.is_frame},
              {"rows_orthogonal", r.rows_orthogonal},
              {"eigen_diagonal", strings(r.eigen_diagonal)},
              {"is_tight", r.is_tight},
              {"tight_value", opt(r.tight_value)},
              {"column_norms_sq", strings(r.column_norms_sq)},
              {"is_equal_norm", r.is_equal_norm},
              {"equal_norm_sq", opt(r.equal_norm_sq)},
              {"is_equiangular_signed", r.is_equiangular_signed},
              {"is_equiangular_modulus", r.is_equiangular_modulus},
              {"angle_value", opt(r.angle_value)},
              {"spark", r.spark ? json(*r.spark) : json(nullptr)},
              {"is_entif", r.is_entif()}};
  return doc.dump();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-norm tight integer frames: construction, verification and existence queries", "entif"};
  app.require_subcommand(1);
  Options o;

  std::string kind;
  auto* construct = app.add_subcommand("construct", "Build a frame and verify it before writing");
  construct->add_option("kind", kind,
                        "two-dim, three-dim, simplex, hadamard-truncate, gensqr-1..5, dim5-even, gcd-adjoin, "
                        "equal-norm, tight, almost-tight, sylvester, paley")
      ->required();
  construct->add_option("--dim", o.dim, "Dimension M");
  construct->add_option("--count", o.count, "Number of vectors N");
  construct->add_option("--order", o.order, "Hadamard order for hadamard-truncate");
  construct->add_option("--epsilon", o.epsilon, "Tightness slack for almost-tight");
  construct->add_option("--seed", o.seed, "Seed for almost-tight");
  construct->add_option("--param", o.params, "Extra parameter key=value (repeatable)");
  add_output_flags(construct, o);

  std::string input;
  auto* verify = app.add_subcommand("verify", "Analyze a frame file (JSON or CSV)");
  verify->add_option("input", input, "Frame file")->required();
  verify->add_flag("--spark", o.spark, "Compute the spark");
  verify->add_flag("--json", o.as_json, "Print the report as JSON");

  auto* feasible = app.add_subcommand("feasible", "Existence oracle for M x N ENTIFs");
  feasible->add_option("--dim", o.dim, "Dimension M")->required();
  feasible->add_option("--count", o.count, "Number of vectors N")->required();
  feasible->add_flag("--json", o.as_json, "Print the verdict as JSON");

  auto* had = app.add_subcommand("hadamard", "Build a Hadamard matrix");
  had->add_option("--order", o.order, "Order")->required();
  add_output_flags(had, o);

  std::string mode;
  std::vector<std::string> inputs;
  auto* adjoin = app.add_subcommand("adjoin", "Combine frame files");
  adjoin->add_option("mode", mode, "h, diag or double")->required();
  adjoin->add_option("inputs", inputs, "Input frame files")->required();
  adjoin->add_option("--param", o.params, "c=<factor> for double");
  add_output_flags(adjoin, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(kind, o, out);
    if (*verify) return cmd_verify(input, o, out);
    if (*feasible) return cmd_feasible(o, out);
    if (*had) return cmd_hadamard(o, out);
    if (*adjoin) return cmd_adjoin(mode, inputs, o, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible [" << e.citation() << "]: " << e.what() << '\n';
    return kExitImpossible;
  } catch (const UnsupportedOrderError& e) {
    err << "unsupported order: " << e.what() << '\n';
    return kExitUnsupportedOrder;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace entif
