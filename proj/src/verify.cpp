#include "schub/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "claims.hpp"

namespace schub {

namespace claims {

std::size_t SnData::index_of(const Permutation& p) const {
  auto it = std::lower_bound(perms->begin(), perms->end(), p);
  return static_cast<std::size_t>(it - perms->begin());
}

const SnData& sn_data(int n) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<SnData>> cache(9);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache.at(n);
  if (!slot) {
    auto d = std::make_unique<SnData>();
    d->perms = &symmetric_group(n);
    d->tables.reserve(d->perms->size());
    d->lengths.reserve(d->perms->size());
    for (const Permutation& p : *d->perms) {
      d->tables.push_back(RankTable::of(p));
      d->lengths.push_back(p.length());
    }
    slot = std::move(d);
  }
  return *slot;
}

void for_pairs_of(const SnData& d, std::size_t w_index,
                  const std::function<void(const PermPair&)>& fn) {
  const Permutation& w = (*d.perms)[w_index];
  const RankTable& tw = d.tables[w_index];
  for (std::size_t xi = 0; xi < d.size(); ++xi) {
    if (!bruhat_leq(d.tables[xi], tw)) continue;
    fn(PermPair::make(w, (*d.perms)[xi]));
  }
}

std::optional<std::size_t> tight_witness_index(const PermPair& pair,
                                               const SnData& d) {
  int n = pair.degree();
  std::vector<Point> level;
  const RankTable& pi = pair.rank_pair();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (pi.at(i, j) == 0) level.push_back({i, j});
  const RankTable& rkw = pair.rank_w();
  for (std::size_t yi = 0; yi < d.size(); ++yi) {
    const RankTable& ty = d.tables[yi];
    bool agrees = true;
    for (Point p : level)
      if (ty.at(p) != rkw.at(p)) {
        agrees = false;
        break;
      }
    if (agrees && !bruhat_leq(ty, rkw)) return yi;
  }
  return std::nullopt;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    register_perm_claims(out);
    register_pair_claims(out);
    register_influence_claims(out);
    register_neighbor_claims(out);
    register_reduction_claims(out);
    return out;
  }();
  return claims;
}

}  // namespace claims

namespace {

using claims::Claim;

const Claim* find_claim(const std::string& id) {
  for (const Claim& c : claims::registry())
    if (c.info.id == id) return &c;
  return nullptr;
}

int effective_cap(const Claim& c, const VerifyOptions& opt) {
  int cap = c.info.hard_max_n;
  if (c.enumerates_sn)
    cap = std::min(cap, std::clamp(opt.max_degree, 1, kMaxDegree));
  return cap;
}

VerificationReport run_one(const Claim& c, int n, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  if (c.enumerates_sn) (void)claims::sn_data(n);  // warm before the workers

  std::uint64_t units = c.units(n);
  int workers = opt.parallelism > 0
                    ? opt.parallelism
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 64);
  workers = static_cast<int>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(units, 1)));

  std::vector<claims::Sink> sinks(workers);
  std::atomic<std::uint64_t> next{0};
  auto body = [&](int wi) {
    for (;;) {
      std::uint64_t u = next.fetch_add(1, std::memory_order_relaxed);
      if (u >= units) break;
      c.run(n, u, sinks[wi]);
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int wi = 0; wi < workers; ++wi) pool.emplace_back(body, wi);
    for (auto& t : pool) t.join();
  }

  VerificationReport r;
  r.claim = c.info.id;
  r.n = n;
  for (const auto& s : sinks) {
    r.checked += s.checked;
    r.violations.insert(r.violations.end(), s.violations.begin(),
                        s.violations.end());
  }
  std::sort(r.violations.begin(), r.violations.end(), violation_less);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace

bool violation_less(const Violation& a, const Violation& b) {
  if (auto c = a.w <=> b.w; c != 0) return c < 0;
  if (auto c = a.x <=> b.x; c != 0) return c < 0;
  Point pa = a.point.value_or(Point{-1, -1});
  Point pb = b.point.value_or(Point{-1, -1});
  if (pa != pb) return pa < pb;
  int ta = a.trans ? a.trans->a * 100 + a.trans->b : -1;
  int tb = b.trans ? b.trans->a * 100 + b.trans->b : -1;
  if (ta != tb) return ta < tb;
  return a.clause < b.clause;
}

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Claim& c : claims::registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

VerificationReport run_claim(const std::string& id, int n,
                             const VerifyOptions& opt) {
  const Claim* c = find_claim(id);
  if (!c) throw UnknownClaimError("unknown claim '" + id + "'");
  if (n < 1) throw DegreeError("degree must be at least 1");
  int cap = effective_cap(*c, opt);
  if (n > cap)
    throw DegreeError("claim '" + id + "' supports degrees up to " +
                      std::to_string(cap));
  if (n > c->info.fast_max_n && !opt.allow_slow)
    throw DegreeError("claim '" + id + "' at degree " + std::to_string(n) +
                      " requires --allow-slow");
  return run_one(*c, n, opt);
}

std::vector<VerificationReport> run_all(int n, const VerifyOptions& opt) {
  if (n < 1) throw DegreeError("degree must be at least 1");
  std::vector<VerificationReport> out;
  for (const Claim& c : claims::registry()) {
    int eff = std::min(n, effective_cap(c, opt));
    if (!opt.allow_slow) eff = std::min(eff, c.info.fast_max_n);
    out.push_back(run_one(c, eff, opt));
  }
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass() ? "[PASS] " : "[FAIL] ") << r.claim << " n=" << r.n
      << " checked=" << r.checked;
  if (!r.pass()) out << " violations=" << r.violations.size();
  out << " (" << static_cast<long long>(r.elapsed_ms + 0.5) << " ms)\n";
  for (const Violation& v : r.violations) {
    out << "  w=" << v.w.str() << " x=" << v.x.str();
    if (v.point) out << " point=" << to_string(*v.point);
    if (v.trans) out << " t=" << v.trans->str();
    out << " clause=" << v.clause << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json violation_to_json(const Violation& v) {
  nlohmann::json j;
  j["w"] = v.w.str();
  j["x"] = v.x.str();
  if (v.point) j["point"] = {v.point->i, v.point->j};
  if (v.trans) j["transposition"] = {v.trans->a, v.trans->b};
  j["clause"] = v.clause;
  return j;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["n"] = r.n;
  j["checked"] = r.checked;
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back(violation_to_json(v));
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  return report_json(r).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace schub
