#include <sstream>

#include "entif/constructors.hpp"
#include "entif/exact.hpp"
#include "entif/feasibility.hpp"

namespace entif {

namespace {

long long param(const Recipe& r, const std::string& key) {
  for (const auto& [k, v] : r.params)
    if (k == key) return v;
  throw PreconditionError("recipe '" + r.kind + "' is missing parameter '" + key + "'");
}

std::size_t as_size(long long v) {
  if (v < 0) throw PreconditionError("recipe parameter must be nonnegative");
  return static_cast<std::size_t>(v);
}

FrameMatrix execute_base(const Recipe& r) {
  const std::string& k = r.kind;
  if (k == "identity") return FrameMatrix::identity(as_size(param(r, "dim")));
  if (k == "two-dim") return entif_2d(as_size(param(r, "n")));
  if (k == "three-dim") {
    return entif_3d(as_size(param(r, "n")), param(r, "family") == 3 ? ThreeDimFamily::kThree : ThreeDimFamily::kFour);
  }
  if (k == "simplex") return simplex_entif(as_size(param(r, "dim"))).frame;
  if (k == "hadamard-truncate") return hadamard_entif(as_size(param(r, "dim")), as_size(param(r, "order")));
  if (k == "gensqr") {
    return gensqr(static_cast<int>(param(r, "family")), as_size(param(r, "n")), static_cast<long>(param(r, "b")));
  }
  if (k == "dim5-even") {
    const Dim5Blocks blocks = dim5_even_blocks(static_cast<long>(param(r, "a")));
    return param(r, "block") == 8 ? blocks.a : blocks.b;
  }
  if (k == "gcd-adjoin-dim5") {
    const Dim5Blocks blocks = dim5_even_blocks(static_cast<long>(param(r, "a")));
    return gcd_adjoin(blocks.a, blocks.b, param(r, "n"));
  }
  throw PreconditionError("unknown recipe kind '" + k + "'");
}

}  // namespace

Recipe Recipe::base(std::string kind, std::vector<std::pair<std::string, long long>> params) {
  Recipe r;
  r.op = Op::kBase;
  r.kind = std::move(kind);
  r.params = std::move(params);
  return r;
}

Recipe Recipe::scale(Recipe child, mpz_class factor) {
  if (factor == 1) return child;
  Recipe r;
  r.op = Op::kScale;
  r.factor = std::move(factor);
  r.parts.push_back({std::move(child), 1});
  return r;
}

Recipe Recipe::adjoin(std::vector<RecipePart> parts) {
  if (parts.size() == 1 && parts.front().copies == 1) return std::move(parts.front().recipe);
  Recipe r;
  r.op = Op::kAdjoin;
  r.parts = std::move(parts);
  return r;
}

Recipe Recipe::lift(Recipe child, std::size_t copies) {
  if (copies == 1) return child;
  Recipe r;
  r.op = Op::kLift;
  r.parts.push_back({std::move(child), copies});
  return r;
}

std::string Recipe::to_string() const {
  std::ostringstream os;
  switch (op) {
    case Op::kBase: {
      os << kind << '(';
      for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i].first << '=' << params[i].second;
      os << ')';
      break;
    }
    case Op::kScale:
      os << "scale(" << factor.get_str() << ',' << parts.front().recipe.to_string() << ')';
      break;
    case Op::kAdjoin:
      os << "hadjoin(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i].copies << '*' << parts[i].recipe.to_string();
      os << ')';
      break;
    case Op::kLift:
      os << "diag(" << parts.front().copies << '*' << parts.front().recipe.to_string() << ')';
      break;
  }
  return os.str();
}

FrameMatrix Recipe::execute() const {
  switch (op) {
    case Op::kBase:
      return execute_base(*this);
    case Op::kScale:
      return scaled(parts.front().recipe.execute(), factor);
    case Op::kAdjoin: {
      FrameMatrix out;
      for (const auto& part : parts) out = hadjoin(out, hadjoin_copies(part.recipe.execute(), part.copies));
      return out;
    }
    case Op::kLift: {
      const FrameMatrix block = parts.front().recipe.execute();
      FrameMatrix out;
      for (std::size_t c = 0; c < parts.front().copies; ++c) out = diag_adjoin(out, block);
      return out;
    }
  }
  throw std::logic_error("unreachable recipe op");
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kExists:
      return "Exists";
    case Feasibility::kImpossible:
      return "Impossible";
    case Feasibility::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace entif
