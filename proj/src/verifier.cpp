#include "springcoh/verifier.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "springcoh/characters.hpp"
#include "springcoh/errors.hpp"
#include "springcoh/inverse_system.hpp"
#include "springcoh/json_io.hpp"
#include "springcoh/orbit_rings.hpp"
#include "springcoh/parallel.hpp"

namespace springcoh {

using nlohmann::json;

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkippedResource: return "skipped-resource";
  }
  return "unknown";
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "formula1", "nfactorial",   "gorenstein",       "theorem1_duality",   "lemma1_socle",
      "kostant",  "spaltenstein", "theorem2_hilbert", "theorem2_character", "top_irreducible"};
  return names;
}

std::vector<std::string> normalize_checks(const std::vector<std::string>& requested) {
  const auto& known = known_checks();
  if (requested.empty()) return known;
  for (const auto& name : requested)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("unknown check '" + name + "'");
  std::vector<std::string> out;
  for (const auto& name : known)
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) out.push_back(name);
  return out;
}

namespace {

json characters_json(const std::vector<ClassFunction>& chars) {
  json out = json::array();
  for (const auto& chi : chars) out.push_back(chi);
  return out;
}

/// Lazily computed objects for one partition, shared by its checks.
class SigmaContext {
 public:
  SigmaContext(const Partition& sigma, const VerifyOptions& options, Budget budget)
      : sigma_(sigma), dual_(sigma.dual()), options_(options), budget_(budget) {}

  const Partition& sigma() const { return sigma_; }
  const Partition& dual() const { return dual_; }

  const InverseSystem& inverse_system() {
    if (!inverse_) inverse_ = std::make_unique<InverseSystem>(sigma_, budget_, 1);
    return *inverse_;
  }

  const BigradedTable& table() {
    if (!table_) {
      if (options_.cache) table_ = options_.cache->load_table(sigma_);
      if (!table_) {
        table_ = inverse_system().bigraded_hilbert();
        if (options_.cache) options_.cache->store_table(sigma_, *table_);
      }
    }
    return *table_;
  }

  const std::vector<std::size_t>& y_hilbert() {
    if (!y_hilbert_) y_hilbert_ = inverse_system().subalgebra_hilbert(Side::kY);
    return *y_hilbert_;
  }

  const std::vector<ClassFunction>& y_characters() {
    if (!y_chars_) y_chars_ = inverse_system().subalgebra_graded_character(Side::kY);
    return *y_chars_;
  }

  const QuotientRing& orbit() {
    if (!orbit_) orbit_ = quotient(cached_basis("orbit-ideal", [&] { return orbit_ideal(dual_, budget_, 1); }));
    return *orbit_;
  }

  const std::vector<ClassFunction>& orbit_characters() {
    if (!orbit_chars_) orbit_chars_ = graded_character(orbit());
    return *orbit_chars_;
  }

  const QuotientRing& levi() {
    if (!levi_)
      levi_ = quotient(cached_basis("levi-ideal", [&] {
        return buchberger(levi_ideal(dual_), MonomialOrder::grevlex(), budget_);
      }));
    return *levi_;
  }

 private:
  GroebnerBasis cached_basis(const char* kind, const std::function<GroebnerBasis()>& compute) {
    if (options_.cache)
      if (auto gb = options_.cache->load_basis(dual_, kind)) return *gb;
    GroebnerBasis gb = compute();
    if (options_.cache) options_.cache->store_basis(dual_, kind, gb);
    return gb;
  }

  Partition sigma_;
  Partition dual_;
  const VerifyOptions& options_;
  Budget budget_;
  std::unique_ptr<InverseSystem> inverse_;
  std::optional<BigradedTable> table_;
  std::optional<std::vector<std::size_t>> y_hilbert_;
  std::optional<std::vector<ClassFunction>> y_chars_;
  std::optional<QuotientRing> orbit_;
  std::optional<std::vector<ClassFunction>> orbit_chars_;
  std::optional<QuotientRing> levi_;
};

struct Outcome {
  bool pass;
  json left;
  json right;
  std::string note;
};

Outcome check_formula1(SigmaContext& ctx) {
  const auto deg = ctx.sigma().degrees();
  const int binomial = ctx.sigma().d2_from_dual();
  const int dual_d2 = ctx.dual().degrees().d2;
  return {deg.d2 == binomial && deg.d1 == dual_d2, json{{"d2_cells", deg.d2}, {"d1", deg.d1}},
          json{{"d2_binomial", binomial}, {"d2_of_dual", dual_d2}}, {}};
}

Outcome check_nfactorial(SigmaContext& ctx) {
  const std::size_t total = ctx.table().total();
  const std::size_t expected = factorial(ctx.sigma().n());
  return {total == expected, json(total), json(expected), {}};
}

Outcome check_gorenstein(SigmaContext& ctx) {
  const BigradedTable& t = ctx.table();
  auto reflected = t.entries;
  for (int a = 0; a <= t.d1; ++a)
    for (int b = 0; b <= t.d2; ++b)
      reflected[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = t.at(t.d1 - a, t.d2 - b);
  const bool corners = t.at(0, 0) == 1 && t.at(t.d1, t.d2) == 1;
  return {corners && reflected == t.entries, json(t.entries), json(reflected),
          corners ? "" : "corner entries are not both 1"};
}

Outcome check_theorem1_duality(SigmaContext& ctx) {
  const auto x_side = ctx.inverse_system().subalgebra_hilbert(Side::kX);
  const auto y_dual = InverseSystem(ctx.dual()).subalgebra_hilbert(Side::kY);
  return {x_side == y_dual, json(x_side), json(y_dual), {}};
}

Outcome check_lemma1_socle(SigmaContext& ctx) {
  const int d2 = ctx.sigma().degrees().d2;
  const int top = static_cast<int>(ctx.y_hilbert().size()) - 1;
  const auto socle = ctx.inverse_system().socle_degrees(Side::kY);
  json left{{"top_degree", top}, {"socle_degrees", socle}};
  json right{{"top_degree", d2}, {"socle_degrees", std::vector<int>{d2}}};
  return {top == d2 && socle == std::set<int>{d2}, left, right, {}};
}

Outcome check_kostant(SigmaContext& ctx) {
  const auto& hilbert = ctx.levi().hilbert;
  const auto expected = q_factorial_product(ctx.dual());
  const int d2 = ctx.sigma().degrees().d2;
  const int top = ctx.levi().top_degree();
  return {hilbert == expected && top == d2, json{{"hilbert", hilbert}, {"top_degree", top}},
          json{{"hilbert", expected}, {"top_degree", d2}}, {}};
}

Outcome check_spaltenstein(SigmaContext& ctx) {
  const bool coinvariant_in_orbit = spaltenstein_check(ctx.orbit());
  bool orbit_in_levi = true;
  for (const auto& g : ctx.orbit().basis.generators()) orbit_in_levi = orbit_in_levi && ctx.levi().basis.contains(g);
  const int n = ctx.sigma().n();
  const RingContext ring = RingContext::doubled(n);
  std::vector<int> ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ys[static_cast<std::size_t>(i)] = n + i;
  bool annihilated = true;
  for (int r = 1; r <= n; ++r)
    annihilated = annihilated && apply_operator(elementary_symmetric(r, ys, ring), ctx.inverse_system().delta()).is_zero();
  json left{{"coinvariant_in_orbit", coinvariant_in_orbit},
            {"orbit_in_levi", orbit_in_levi},
            {"symmetric_y_operators_annihilate_delta", annihilated}};
  json right{{"coinvariant_in_orbit", true}, {"orbit_in_levi", true}, {"symmetric_y_operators_annihilate_delta", true}};
  return {left == right, left, right, {}};
}

Outcome check_theorem2_hilbert(SigmaContext& ctx) {
  const auto& orbit = ctx.orbit().hilbert;
  const auto& model = ctx.y_hilbert();
  return {orbit == model, json(orbit), json(model), {}};
}

Outcome check_theorem2_character(SigmaContext& ctx) {
  const auto& orbit = ctx.orbit_characters();
  const auto& model = ctx.y_characters();
  return {orbit == model, characters_json(orbit), characters_json(model), {}};
}

Outcome check_top_irreducible(SigmaContext& ctx) {
  const int d2 = ctx.sigma().degrees().d2;
  const auto& chars = ctx.orbit_characters();
  Rational ip = -1;
  if (static_cast<int>(chars.size()) == d2 + 1) ip = inner_product(chars.back(), chars.back());
  bool genuine = true;
  for (const auto& chi : chars) genuine = genuine && decompose(chi).genuine;
  std::vector<int> socle_degrees;
  const auto dims = socle(ctx.orbit());
  for (std::size_t d = 0; d < dims.size(); ++d)
    if (dims[d]) socle_degrees.push_back(static_cast<int>(d));
  json left{{"top_self_inner_product", rational_json(ip)},
            {"socle_degrees", socle_degrees},
            {"decompositions_genuine", genuine}};
  json right{{"top_self_inner_product", 1}, {"socle_degrees", std::vector<int>{d2}}, {"decompositions_genuine", true}};
  return {left == right, left, right, {}};
}

using CheckFn = Outcome (*)(SigmaContext&);

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"formula1", check_formula1},
      {"nfactorial", check_nfactorial},
      {"gorenstein", check_gorenstein},
      {"theorem1_duality", check_theorem1_duality},
      {"lemma1_socle", check_lemma1_socle},
      {"kostant", check_kostant},
      {"spaltenstein", check_spaltenstein},
      {"theorem2_hilbert", check_theorem2_hilbert},
      {"theorem2_character", check_theorem2_character},
      {"top_irreducible", check_top_irreducible},
  };
  return table;
}

}  // namespace

std::vector<CheckResult> run_checks(const Partition& sigma, const VerifyOptions& options) {
  const auto checks = normalize_checks(options.checks);
  Budget budget = options.budget;
  if (options.timeout_per_sigma) budget = budget.with_timeout(*options.timeout_per_sigma);
  SigmaContext ctx(sigma, options, budget);
  std::vector<CheckResult> out;
  for (const auto& name : checks) {
    CheckResult r;
    r.check = name;
    r.sigma = sigma.to_string();
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check_table().at(name)(ctx);
      r.status = o.pass ? CheckStatus::kPass : CheckStatus::kFail;
      r.left = std::move(o.left);
      r.right = std::move(o.right);
      r.note = std::move(o.note);
    } catch (const ResourceLimitError& e) {
      r.status = CheckStatus::kSkippedResource;
      r.note = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.note = std::string("error: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    spdlog::debug("{} at ({}): {} in {:.1f} ms", name, r.sigma, to_string(r.status), r.millis);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> verify(const VerifyOptions& options) {
  if (options.n < 1 || options.n > 6) throw UsageError("verify: n must lie in [1, 6]");
  normalize_checks(options.checks);
  const auto partitions = all_partitions(options.n);
  std::vector<std::vector<CheckResult>> per_sigma(partitions.size());
  parallel_for(partitions.size(), options.jobs, [&](std::size_t k) {
    spdlog::info("verifying sigma = ({})", partitions[k].to_string());
    per_sigma[k] = run_checks(partitions[k], options);
  });
  std::vector<CheckResult> out;
  for (auto& rs : per_sigma)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

int exit_code(const std::vector<CheckResult>& results) {
  bool skipped = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::kFail) return 1;
    skipped = skipped || r.status == CheckStatus::kSkippedResource;
  }
  return skipped ? 3 : 0;
}

json report_json(const std::string& command, int n, const std::vector<CheckResult>& results, bool include_timing) {
  json rs = json::array();
  for (const auto& r : results) {
    json item{{"check", r.check}, {"sigma", r.sigma}, {"status", to_string(r.status)}, {"left", r.left}, {"right", r.right}};
    if (!r.note.empty()) item["note"] = r.note;
    if (include_timing) item["millis"] = r.millis;
    rs.push_back(std::move(item));
  }
  return json{{"command", command},
              {"n", n},
              {"results", std::move(rs)},
              {"versions", {{"springcoh", kVersion}, {"cache_schema", kCacheSchemaVersion}}}};
}

Model parse_model(const std::string& name) {
  static const std::map<std::string, Model> models = {
      {"apolarity-Y", Model::kApolarityY}, {"apolarity-X", Model::kApolarityX},
      {"apolarity-bigraded", Model::kApolarityBigraded}, {"orbit", Model::kOrbit},
      {"levi", Model::kLevi}, {"coinvariant", Model::kCoinvariant}};
  auto it = models.find(name);
  if (it == models.end()) throw UsageError("unknown model '" + name + "'");
  return it->second;
}

std::string to_string(Model model) {
  switch (model) {
    case Model::kApolarityY: return "apolarity-Y";
    case Model::kApolarityX: return "apolarity-X";
    case Model::kApolarityBigraded: return "apolarity-bigraded";
    case Model::kOrbit: return "orbit";
    case Model::kLevi: return "levi";
    case Model::kCoinvariant: return "coinvariant";
  }
  return "unknown";
}

namespace {

QuotientRing model_quotient(const Partition& sigma, Model model, const VerifyOptions& options) {
  switch (model) {
    case Model::kOrbit: {
      if (options.cache)
        if (auto gb = options.cache->load_basis(sigma.dual(), "orbit-ideal")) return quotient(*gb);
      GroebnerBasis gb = orbit_ideal(sigma.dual(), options.budget, options.jobs);
      if (options.cache) options.cache->store_basis(sigma.dual(), "orbit-ideal", gb);
      return quotient(gb);
    }
    case Model::kLevi: return quotient(buchberger(levi_ideal(sigma), MonomialOrder::grevlex(), options.budget));
    case Model::kCoinvariant:
      return quotient(buchberger(coinvariant_ideal(sigma.n()), MonomialOrder::grevlex(), options.budget));
    default: throw UsageError("model " + to_string(model) + " is not a quotient ring");
  }
}

}  // namespace

json hilbert_report(const Partition& sigma, Model model, const VerifyOptions& options) {
  json out{{"command", "hilbert"}, {"sigma", sigma.to_string()}, {"model", to_string(model)}};
  switch (model) {
    case Model::kApolarityY:
      out["hilbert"] = InverseSystem(sigma, options.budget, options.jobs).subalgebra_hilbert(Side::kY);
      break;
    case Model::kApolarityX:
      out["hilbert"] = InverseSystem(sigma, options.budget, options.jobs).subalgebra_hilbert(Side::kX);
      break;
    case Model::kApolarityBigraded: {
      std::optional<BigradedTable> table;
      if (options.cache) table = options.cache->load_table(sigma);
      if (!table) {
        table = InverseSystem(sigma, options.budget, options.jobs).bigraded_hilbert();
        if (options.cache) options.cache->store_table(sigma, *table);
      }
      out["bigraded"] = *table;
      out["total"] = table->total();
      break;
    }
    default: out["hilbert"] = model_quotient(sigma, model, options).hilbert;
  }
  return out;
}

json character_report(const Partition& sigma, Model model, bool graded, const VerifyOptions& options) {
  std::vector<ClassFunction> chars;
  switch (model) {
    case Model::kApolarityY:
      chars = InverseSystem(sigma, options.budget, options.jobs).subalgebra_graded_character(Side::kY);
      break;
    case Model::kApolarityX:
      chars = InverseSystem(sigma, options.budget, options.jobs).subalgebra_graded_character(Side::kX);
      break;
    case Model::kApolarityBigraded: throw UsageError("characters are not available for the bigraded model");
    case Model::kLevi:
      if (sigma.length() > 1) throw UsageError("the levi quotient is not S_n-stable; no character is defined");
      [[fallthrough]];
    default: chars = graded_character(model_quotient(sigma, model, options));
  }
  auto describe = [](const ClassFunction& chi) {
    const Decomposition dec = decompose(chi);
    json mult = json::object();
    for (const auto& [shape, m] : dec.multiplicities) mult[shape.to_string()] = rational_json(m);
    return json{{"values", chi}, {"decomposition", mult}, {"genuine", dec.genuine}};
  };
  json out{{"command", "character"}, {"sigma", sigma.to_string()}, {"model", to_string(model)}, {"graded", graded}};
  if (graded) {
    json degrees = json::array();
    for (std::size_t d = 0; d < chars.size(); ++d) {
      json item = describe(chars[d]);
      item["degree"] = d;
      degrees.push_back(std::move(item));
    }
    out["degrees"] = std::move(degrees);
  } else {
    ClassFunction total(sigma.n());
    for (const auto& chi : chars) total = total + chi;
    out["total"] = describe(total);
  }
  return out;
}

}  // namespace springcoh
