#include "jobs.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "cherednik/arrangements.hpp"
#include "cherednik/certify.hpp"
#include "cherednik/degeneration.hpp"
#include "cherednik/field.hpp"
#include "cherednik/group.hpp"
#include "cherednik/koszul.hpp"
#include "cherednik/lmodule.hpp"
#include "cherednik/oracles.hpp"
#include "cherednik/params.hpp"
#include "cherednik/polyparse.hpp"
#include "cherednik/ratfunc.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/resolutions.hpp"
#include "cherednik/transition.hpp"
#include "cherednik/verma.hpp"

namespace cherednik::cli {

using json = nlohmann::json;

namespace {

const std::set<std::string> kSubcommands{"lmod", "dunkl", "arr", "betti", "transition", "degen", "koszul", "sweep"};

[[noreturn]] void invalid(const std::string& code, const std::string& message) { throw ValidationError{code, message}; }

void check(bool ok, const std::string& code, const std::string& message) {
  if (!ok) invalid(code, message);
}

FiniteField job_field(const JobConfig& c) { return FiniteField::with_roots(c.p, std::max(c.m, 1), 1, kGenericFieldSize); }

std::shared_ptr<VermaEngine<FiniteField>> engine(const JobConfig& c, std::uint64_t seed) {
  const GroupSpec G(c.m, c.effective_r(), c.n);
  const FiniteField F = job_field(c);
  return std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, c.tau, F), F, specialized_params(G, F, c.hbar, seed));
}

LModule<FiniteField> lmodule(const JobConfig& c, std::shared_ptr<VermaEngine<FiniteField>> eng) {
  return c.dmax >= 0 ? compute_L(std::move(eng), c.dmax) : compute_L(std::move(eng));
}

std::optional<Partition> as_partition(const std::string& tau, int n) {
  if (tau == "trivial") return Partition{n};
  if (tau.rfind("specht:", 0) == 0) return parse_partition(tau.substr(7));
  return std::nullopt;
}

/// Closed form for the configuration when one is known; the name says which.
std::optional<std::pair<std::string, std::vector<std::int64_t>>> oracle_for(const JobConfig& c, int N) {
  const int r = c.effective_r();
  if (c.n == 2 && c.m == r && c.m >= 2 && c.hbar == 0)
    if (auto s = closed_hilbert_dihedral(c.m, c.tau)) return std::pair{"dihedral", s->c};
  const bool p_large = static_cast<int>(c.p) > c.n;
  if (r == 1 && p_large)
    if (auto lambda = as_partition(c.tau, c.n)) {
      auto s = closed_hilbert_wreath(*lambda, c.m, c.n, c.hbar, static_cast<int>(c.p), N).coeffs;
      while (!s.empty() && s.back() == 0) s.pop_back();
      return std::pair{"wreath", s};
    }
  if (c.tau == "trivial" && c.hbar == 0 && p_large) {
    auto s = closed_hilbert_trivial(c.m, r, c.n, N).coeffs;
    while (!s.empty() && s.back() == 0) s.pop_back();
    return std::pair{"invariant-degrees", s};
  }
  return std::nullopt;
}

JobResult run_lmod(const JobConfig& c) {
  JobResult res;
  json& a = res.artifact;
  const auto first = engine(c, c.seeds.front());
  const auto L = lmodule(c, first);
  const auto h = L.hilbert();
  a["group"] = first->group().to_string();
  a["tau"] = c.tau;
  a["hbar"] = c.hbar;
  a["field"] = first->field().spec();
  a["status"] = to_string(L.status());
  a["hilbert"] = h;
  a["topDegree"] = L.top_degree();
  a["certificate"] = L.status() == LStatus::Complete ? json(certify_irreducible(L, true)) : json(nullptr);

  bool agree = true;
  json per_seed = json::array();
  for (std::uint64_t s : c.seeds) {
    const auto hs = s == c.seeds.front() ? h : lmodule(c, engine(c, s)).hilbert();
    per_seed.push_back({{"seed", s}, {"hilbert", hs}});
    agree = agree && hs == h;
  }
  a["seeds"] = per_seed;
  a["seedsAgree"] = agree;

  if (c.mode == "symbolic") {
    const GroupSpec G(c.m, c.effective_r(), c.n);
    const FiniteField K = job_field(c);
    const auto R = parameter_field(G, K);
    auto eng = std::make_shared<VermaEngine<RationalFunctionField>>(G, builtin_rep(G, c.tau, K), R,
                                                                     symbolic_params(G, R, c.hbar));
    const auto Ls = c.dmax >= 0 ? compute_L(eng, c.dmax) : compute_L(eng);
    a["symbolic"] = {{"hilbert", Ls.hilbert()}, {"agrees", Ls.hilbert() == h}};
    agree = agree && Ls.hilbert() == h;
  }

  bool oracle_ok = true;
  if (auto o = oracle_for(c, std::max(L.top_degree() + 2, 0))) {
    auto want = o->second;
    if (c.inject_mismatch && !want.empty()) want[0] += 1;
    oracle_ok = want == h;
    a["oracle"] = {{"name", o->first}, {"hilbert", want}, {"match", oracle_ok}};
  } else {
    a["oracle"] = nullptr;
  }
  const bool certified = a["certificate"].is_object() && a["certificate"]["certified"].get<bool>();
  res.mismatch = !agree || !oracle_ok || L.status() != LStatus::Complete;
  a["match"] = !res.mismatch;
  a["certified"] = certified;
  return res;
}

JobResult run_dunkl(const JobConfig& c) {
  JobResult res;
  const auto eng = engine(c, c.seeds.front());
  const auto& f = eng->field();
  auto v = VermaVector<FiniteField>::zero(f, c.n, eng->tdim());
  check(c.component >= 1 && c.component <= eng->tdim(), "InvalidParameters", "component out of range");
  v.comp[c.component - 1] = parse_poly(f, c.n, c.poly);
  std::vector<std::string> labels;
  for (int b = 1; b <= eng->tdim(); ++b) labels.push_back("e" + std::to_string(b));
  json images = json::array();
  for (int i = 0; i < c.n; ++i)
    images.push_back({{"operator", "D" + std::to_string(i + 1)}, {"value", eng->dunkl_apply(i, v).to_string(labels)}});
  res.artifact = {{"group", eng->group().to_string()}, {"tau", c.tau}, {"field", f.spec()},
                  {"input", v.to_string(labels)}, {"images", images}};
  return res;
}

JobResult run_arr(const JobConfig& c) {
  JobResult res;
  const int N = c.dmax >= 0 ? c.dmax : 10;
  const FiniteField F = FiniteField::prime(c.p);
  ArrangementIdeal<FiniteField> I;
  if (c.kind == "I") I = ideal_I(F, c.i, c.m, c.n);
  else if (c.kind == "T") I = ideal_T(F, c.i, c.n);
  else I = conjectured_J_generators(F, c.m, c.n, static_cast<int>(c.p));
  const auto h = I.hilbert(N);
  json& a = res.artifact;
  a = {{"kind", to_string(I.kind)}, {"n", c.n}, {"i", I.i}, {"m", c.m}, {"p", c.p}, {"generators", I.generators.size()},
       {"hilbert", h}};
  bool ok = true;
  if (auto o = I.oracle_series(N)) {
    auto want = o->coeffs;
    if (c.inject_mismatch) want[0] += 1;
    a["oracle"] = {{"hilbert", want}, {"match", want == h}};
    ok = want == h;
  }
  if (c.kind == "J") {
    JobConfig lc = c;
    lc.r = c.m;
    lc.tau = "trivial";
    lc.hbar = 0;
    lc.dmax = -1;
    const auto L = lmodule(lc, engine(lc, 1));
    auto hl = L.hilbert();
    std::vector<std::int64_t> hq(h.begin(), h.begin() + std::min<std::size_t>(h.size(), hl.size() + 1));
    hl.resize(hq.size(), 0);
    a["computedL"] = {{"hilbert", L.hilbert()}, {"match", hl == hq}};
    ok = ok && hl == hq;
    if (I.oracle_top_degree) {
      a["oracleTopDegree"] = *I.oracle_top_degree;
      ok = ok && *I.oracle_top_degree == L.top_degree();
    }
  }
  a["match"] = ok;
  res.mismatch = !ok;
  return res;
}

JobResult run_betti(const JobConfig& c) {
  JobResult res;
  json& a = res.artifact;
  if (!c.kind.empty()) {
    const FiniteField F = FiniteField::prime(c.p);
    const auto I = c.kind == "I" ? ideal_I(F, c.i, c.m, c.n) : ideal_T(F, c.i, c.n);
    const GroebnerQuotient<FiniteField> Q(ideal_groebner(F, c.n, I.generators));
    const int D = c.dmax >= 0 ? c.dmax : 3 * c.n + 2 * c.m * c.i;
    const auto T = graded_betti(module_view(Q, D), D);
    const int codim = c.kind == "I" ? c.n - c.i - 1 : c.n - c.i + 1;
    a = {{"kind", to_string(I.kind)}, {"n", c.n}, {"i", c.i}, {"m", c.m}, {"p", c.p}, {"betti", T}, {"table", T.to_string()}};
    if (T.complete) a["duality"] = check_duality(T, codim);
    return res;
  }
  const auto L = lmodule(c, engine(c, c.seeds.front()));
  require(L.status() == LStatus::Complete, ErrorCode::CapTooSmall, "L did not terminate below the cap");
  const auto T = graded_betti(module_view(L), -1);
  a = {{"group", L.engine().group().to_string()}, {"tau", c.tau}, {"hilbert", L.hilbert()}, {"betti", T},
       {"table", T.to_string()}, {"duality", check_duality(T, c.n)}};
  return res;
}

JobResult run_transition(const JobConfig& c) {
  JobResult res;
  const auto T = transition_matrix(c.m, c.p, c.seeds.front());
  const bool ok = reproduces_simple_characters(T, c.m + 4, c.seeds.front()) && !c.inject_mismatch;
  res.artifact = T;
  res.artifact["table"] = T.to_string();
  res.artifact["reproducesSimpleCharacters"] = ok;
  res.artifact["match"] = ok;
  res.mismatch = !ok;
  return res;
}

JobResult run_degen(const JobConfig& c) {
  JobResult res;
  const auto rep = verify_degeneration(c.m, c.effective_r(), c.n, c.tau, c.p, c.seeds.front());
  res.artifact = rep;
  res.mismatch = !rep.ok() || c.inject_mismatch;
  res.artifact["match"] = !res.mismatch;
  return res;
}

PolyMatrix<FiniteField> parse_matrix(const FiniteField& f, int n, const json& rows) {
  PolyMatrix<FiniteField> M;
  for (const auto& row : rows) {
    M.emplace_back();
    for (const auto& e : row) M.back().push_back(parse_poly(f, n, e.get<std::string>()));
  }
  return M;
}

JobResult run_koszul(const JobConfig& c) {
  JobResult res;
  json& a = res.artifact;
  if (c.gamma0) {
    const GroupSpec G(c.m, c.m, 3);
    const FiniteField F = job_field(c);
    auto eng = std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, "gamma:0", F), F,
                                                           specialized_params(G, F, 0, c.seeds.front()));
    const auto L = compute_L(eng);
    const auto rep = matrix_koszul_check(gamma0_matrices(F, c.m), &L);
    a = {{"group", G.to_string()}, {"tau", "gamma:0"}, {"report", rep}};
    res.mismatch = !(rep.commute && rep.determinants_regular && rep.columns_in_J.value_or(false) &&
                     rep.predicted_matches_L.value_or(false));
  } else {
    std::ifstream in(c.fixture);
    check(static_cast<bool>(in), "InvalidParameters", "cannot read fixture " + c.fixture);
    const json fx = json::parse(in);
    const auto& gj = fx.at("group");
    const GroupSpec G(gj.at("m").get<int>(), gj.at("r").get<int>(), gj.at("n").get<int>());
    const FiniteField F = FiniteField::with_roots(c.p, G.m(), 1, kGenericFieldSize);
    const std::string key = std::to_string(c.p);
    check(fx.at("characteristics").contains(key), "InvalidParameters", "fixture has no matrices for p = " + key);
    std::vector<PolyMatrix<FiniteField>> mats;
    for (const auto& mj : fx["characteristics"][key]) mats.push_back(parse_matrix(F, G.n(), mj));
    if (fx.contains("basis")) {
      std::vector<Poly<FiniteField>> basis;
      for (const auto& b : fx["basis"]) basis.push_back(parse_poly(F, G.n(), b.get<std::string>()));
      const auto X = specht_basis_change(F, G.n(), fx.at("partition").get<Partition>(), basis);
      for (auto& M : mats) M = change_basis(X, M);
    }
    const std::string tau = fx.at("tau");
    auto eng = std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, tau, F), F,
                                                           specialized_params(G, F, 0, c.seeds.front()));
    const auto L = compute_L(eng);
    const auto rep = matrix_koszul_check(mats, &L);
    const auto B = column_module_betti(mats, static_cast<int>(rep.predicted.size()) + G.n());
    a = {{"group", G.to_string()}, {"tau", tau}, {"report", rep}, {"bettiTotals", B.ranks()}, {"table", B.to_string()}};
    bool ok = true;
    if (fx.contains("expected")) {
      const auto& e = fx["expected"];
      auto hl = L.hilbert();
      ok = e.value("commute", rep.commute) == rep.commute &&
           e.value("determinants_regular", rep.determinants_regular) == rep.determinants_regular &&
           e.value("columns_in_J", true) == rep.columns_in_J.value_or(false) &&
           e.value("hilbert", hl) == hl &&
           e.value("betti_totals", B.ranks()) == B.ranks();
    }
    res.mismatch = !ok;
  }
  if (c.inject_mismatch) res.mismatch = true;
  a["match"] = !res.mismatch;
  return res;
}

std::string hex(const unsigned char* data, std::size_t len) {
  std::ostringstream os;
  for (std::size_t k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(data[k]);
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string series_string(const std::vector<std::int64_t>& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + std::to_string(s[k]);
  return out;
}

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

}  // namespace

void validate(const JobConfig& c) {
  check(kSubcommands.count(c.subcommand) == 1, "UnknownName", "unknown subcommand " + c.subcommand);
  check(c.out == "json" || c.out == "csv" || c.out == "ascii", "InvalidParameters", "--out must be json, csv or ascii");
  check(c.jobs >= 1, "InvalidParameters", "--jobs must be positive");
  check(!c.seeds.empty(), "InvalidParameters", "at least one seed is required");
  if (c.subcommand == "sweep") return;
  check(is_prime(c.p), "NotPrime", std::to_string(c.p) + " is not prime");
  check(c.hbar == 0 || c.hbar == 1, "InvalidParameters", "hbar must be 0 or 1");
  check(c.mode == "specialized" || c.mode == "symbolic", "InvalidParameters", "--mode must be specialized or symbolic");
  if (c.subcommand == "arr" || (c.subcommand == "betti" && !c.kind.empty())) {
    check(c.n >= 2 && c.m >= 1, "InvalidParameters", "need n >= 2 and m >= 1");
    check(c.kind == "I" || c.kind == "T" || (c.kind == "J" && c.subcommand == "arr"), "InvalidParameters",
          "--kind must be I, T or J");
    check(c.kind == "T" || c.m % static_cast<int>(c.p) != 0, "CharacteristicDividesM", "p divides m");
    return;
  }
  if (c.subcommand == "koszul" && !c.gamma0) {
    check(!c.fixture.empty(), "InvalidParameters", "koszul needs --fixture or --gamma0");
    return;
  }
  const int r = c.subcommand == "koszul" ? c.m : c.effective_r();
  check(c.m >= 1 && c.n >= 1 && r >= 1, "InvalidParameters", "m, r, n must be positive");
  check(c.m % r == 0, "InvalidParameters", "r must divide m");
  check(c.m % static_cast<int>(c.p) != 0, "CharacteristicDividesM", "p = " + std::to_string(c.p) + " divides m = " +
                                                                        std::to_string(c.m));
  if (c.subcommand == "transition") {
    check(c.p != 2, "CharacteristicDividesM", "p = 2 divides the order of every dihedral group");
    check(c.m >= 2, "InvalidParameters", "transition matrices need m >= 2");
    return;
  }
  if (c.subcommand == "koszul") return;
  try {
    const GroupSpec G(c.m, r, c.n);
    const std::string tau = c.subcommand == "degen" ? "pullback:" + c.tau : c.tau;
    (void)builtin_rep(G, tau, job_field(c));
  } catch (const Error& e) {
    invalid(std::string(to_string(e.code())), e.what());
  }
  if (c.subcommand == "dunkl") check(!c.poly.empty(), "InvalidParameters", "dunkl needs --poly");
}

json canonical(const JobConfig& c) {
  json j = {{"version", 1}, {"subcommand", c.subcommand}, {"p", c.p}, {"seeds", c.seeds}};
  const auto& s = c.subcommand;
  if (s == "arr" || (s == "betti" && !c.kind.empty())) {
    j.update({{"kind", c.kind}, {"n", c.n}, {"i", c.i}, {"m", c.m}, {"dmax", c.dmax}});
  } else if (s == "transition") {
    j["m"] = c.m;
  } else if (s == "koszul") {
    if (c.gamma0) {
      j.update({{"gamma0", true}, {"m", c.m}});
    } else {
      std::ifstream in(c.fixture);
      j["fixture"] = in ? json::parse(in) : json(c.fixture);
    }
  } else {
    j.update({{"m", c.m}, {"r", c.effective_r()}, {"n", c.n}, {"tau", c.tau}, {"hbar", c.hbar}, {"dmax", c.dmax}});
    if (s == "lmod") j["mode"] = c.mode;
    if (s == "dunkl") j.update({{"poly", c.poly}, {"component", c.component}});
  }
  if (c.inject_mismatch) j["injectMismatch"] = true;
  return j;
}

std::string digest(const JobConfig& c) {
  const std::string text = canonical(c).dump();
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
  return hex(md, SHA256_DIGEST_LENGTH);
}

JobResult compute(const JobConfig& c) {
  JobResult res;
  if (c.subcommand == "lmod") res = run_lmod(c);
  else if (c.subcommand == "dunkl") res = run_dunkl(c);
  else if (c.subcommand == "arr") res = run_arr(c);
  else if (c.subcommand == "betti") res = run_betti(c);
  else if (c.subcommand == "transition") res = run_transition(c);
  else if (c.subcommand == "degen") res = run_degen(c);
  else if (c.subcommand == "koszul") res = run_koszul(c);
  else invalid("UnknownName", "subcommand " + c.subcommand + " has no single-job form");
  res.artifact["config"] = canonical(c);
  res.artifact["subcommand"] = c.subcommand;
  res.artifact["mismatch"] = res.mismatch;
  return res;
}

std::filesystem::path Cache::resolve(const std::string& flag) {
  if (const char* env = std::getenv("CHEREDNIK_CACHE"); env && *env) return env;
  return flag.empty() ? ".cherednik-cache" : flag;
}

std::optional<json> Cache::load(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void Cache::store(const std::string& key, const json& artifact) const {
  std::filesystem::create_directories(dir_);
  const auto tmp = dir_ / (key + ".json.tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp);
    out << artifact.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, dir_ / (key + ".json"));
}

JobResult run(const JobConfig& c, const Cache& cache, bool fresh) {
  const std::string key = digest(c);
  if (!fresh)
    if (auto hit = cache.load(key)) {
      JobResult res;
      res.artifact = std::move(*hit);
      res.mismatch = res.artifact.value("mismatch", false);
      res.from_cache = true;
      return res;
    }
  JobResult res = compute(c);
  cache.store(key, res.artifact);
  return res;
}

std::vector<JobConfig> expand_sweep(const JobConfig& c) {
  std::vector<JobConfig> jobs;
  const std::vector<int> rs = c.rs.empty() ? std::vector<int>{0} : c.rs;
  for (int m : c.ms)
    for (int r : rs)
      for (int n : c.ns)
        for (std::uint32_t p : c.ps)
          for (const auto& tau : c.taus) {
            JobConfig j = c;
            j.subcommand = "lmod";
            j.m = m;
            j.r = r;
            j.n = n;
            j.p = p;
            j.tau = tau;
            j.inject_mismatch = c.inject_mismatch && jobs.empty();
            jobs.push_back(std::move(j));
          }
  return jobs;
}

std::vector<SweepRow> run_sweep(const JobConfig& c, const Cache& cache, bool fresh) {
  const auto jobs = expand_sweep(c);
  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      SweepRow& row = rows[k];
      row.config = jobs[k];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        validate(jobs[k]);
        const auto res = run(jobs[k], cache, fresh);
        const auto& a = res.artifact;
        row.status = res.mismatch ? "mismatch" : "ok";
        row.series = a.at("hilbert").get<std::vector<std::int64_t>>();
        row.top_degree = a.at("topDegree").get<int>();
        if (a.at("certificate").is_object()) row.certified = a["certificate"]["certified"].get<bool>();
        if (a.at("oracle").is_object()) row.oracle_match = a["oracle"]["match"].get<bool>();
      } catch (const ValidationError& e) {
        row.status = "invalid";
        row.note = e.code;
      } catch (const Error& e) {
        row.status = "error";
        row.note = std::string(to_string(e.code()));
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min<int>(c.jobs, static_cast<int>(jobs.size())));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_sweep(const std::vector<SweepRow>& rows, const std::string& out) {
  const std::vector<std::string> header{"m", "r", "n", "p", "tau", "series", "top", "certified", "oracle", "status", "wall_ms"};
  std::vector<std::vector<std::string>> cells{header};
  for (const auto& row : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << row.wall_ms;
    cells.push_back({std::to_string(row.config.m), std::to_string(row.config.effective_r()), std::to_string(row.config.n),
                     std::to_string(row.config.p), row.config.tau, series_string(row.series),
                     std::to_string(row.top_degree), flag(row.certified), flag(row.oracle_match),
                     row.note.empty() ? row.status : row.status + " (" + row.note + ")", ms.str()});
  }
  std::ostringstream os;
  if (out == "json") {
    json arr = json::array();
    for (std::size_t k = 1; k < cells.size(); ++k) {
      json r;
      for (std::size_t c = 0; c < header.size(); ++c) r[header[c]] = cells[k][c];
      arr.push_back(r);
    }
    os << arr.dump(2) << "\n";
  } else if (out == "csv") {
    for (const auto& r : cells) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(r[c]);
      os << "\n";
    }
  } else {
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& r : cells)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : cells) {
      for (std::size_t c = 0; c < r.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c]) + 2) << r[c];
      os << "\n";
    }
  }
  return os.str();
}

std::string format_artifact(const json& a, const std::string& out) {
  if (out == "json") return a.dump(2) + "\n";
  std::ostringstream os;
  if (out == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : a.items())
      if (k != "table") os << csv_field(k) << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
  }
  for (const auto& [k, v] : a.items())
    if (k != "table" && k != "config") os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  if (a.contains("table")) os << "\n" << a["table"].get<std::string>();
  return os.str();
}

json error_record(const std::string& code, const std::string& message, int exit_code) {
  return {{"error", {{"code", code}, {"message", message}, {"exit", exit_code}}}};
}

}  // namespace cherednik::cli
