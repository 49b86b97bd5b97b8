#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfext/cocommutative.hpp"
#include "hopfext/commutative.hpp"
#include "hopfext/hopf_algebra.hpp"
#include "hopfext/orbit_engine.hpp"

namespace {

using namespace hopfext;
using nlohmann::json;

struct VerificationRow {
  std::string id;
  std::uint64_t claim = 0;
  std::uint64_t computed = 0;
  bool match = false;
  double ms = 0.0;
};

CpModule module_from_options(std::uint32_t p, const std::string& blocks, std::size_t n) {
  if (!blocks.empty()) return CpModule::from_blocks(BlockProfile::parse(p, blocks));
  if (n == 0) throw CLI::ValidationError("--blocks or --n is required");
  return CpModule::trivial(p, n);
}

std::string point_to_string(const ClassSpace& space, std::uint64_t rep) {
  ClassPoint pt = decode_point(space, rep);
  std::ostringstream os;
  for (std::size_t i = 0; i < pt.chi.size(); ++i) os << (i ? "," : "") << pt.chi[i];
  os << ";";
  for (std::size_t i = 0; i < pt.beta.size(); ++i) os << (i ? "," : "") << pt.beta[i];
  return os.str();
}

FpVec parse_coords(const std::string& text) {
  FpVec out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
    out.push_back(static_cast<Fp>(v));
  }
  return out;
}

ClassPoint parse_point(const ClassSpace& space, const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("point must be 'chi_coords;beta_coords'");
  ClassPoint pt{parse_coords(text.substr(0, semi)), parse_coords(text.substr(semi + 1))};
  if (pt.chi.size() != space.chi_dim() || pt.beta.size() != space.alt_dim())
    throw std::invalid_argument("point has wrong dimensions: expected " +
                                std::to_string(space.chi_dim()) + ";" +
                                std::to_string(space.alt_dim()) + " coordinates");
  for (auto& x : pt.chi) x %= space.p();
  for (auto& x : pt.beta) x %= space.p();
  return pt;
}

int run_classify(std::uint32_t p, const std::string& blocks, std::size_t n,
                 const std::string& format, std::uint64_t cap_points, std::uint64_t cap_group) {
  CpModule m = module_from_options(p, blocks, n);
  ClassifyResult res = classify_module(m, cap_points, cap_group);
  ClassSpace space(m);
  if (format == "json") {
    json j;
    j["p"] = p;
    j["blocks"] = res.profile.to_string();
    j["chi_dim"] = res.chi_dim;
    j["alt_dim"] = res.alt_dim;
    j["aut_order"] = res.aut_order;
    j["twist_group"] = res.twist_group;
    j["cocommutative"] = res.counts.cocommutative;
    j["noncocommutative"] = res.counts.noncocommutative;
    j["total"] = res.counts.total;
    std::vector<json> orbits;
    for (std::size_t i = 0; i < res.full_gamma.representatives.size(); ++i)
      orbits.push_back({{"representative", point_to_string(space, res.full_gamma.representatives[i])},
                        {"size", res.full_gamma.orbit_sizes[i]}});
    j["full_orbit_space"] = orbits;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "p,blocks,chi_dim,alt_dim,aut_order,cocommutative,noncocommutative,total\n"
              << p << ",\"" << res.profile.to_string() << "\"," << res.chi_dim << ","
              << res.alt_dim << "," << res.aut_order << "," << res.counts.cocommutative << ","
              << res.counts.noncocommutative << "," << res.counts.total << "\n";
  } else {
    std::cout << "module: p=" << p << " blocks=" << res.profile.to_string() << " (rank "
              << m.n() << ")\n";
    std::cout << "space: chi dim " << res.chi_dim << ", alt dim " << res.alt_dim << ", "
              << "points p^" << res.chi_dim + res.alt_dim << "\n";
    std::cout << "automorphisms: " << res.aut_order << ", twist exponents:";
    for (auto k : res.twist_group) std::cout << " " << k;
    std::cout << ", extended group: " << res.aut_order * res.twist_group.size() << "\n";
    std::cout << "isoclasses: cocommutative " << res.counts.cocommutative
              << ", noncocommutative " << res.counts.noncocommutative << ", total "
              << res.counts.total << "\n";
    std::cout << "orbit representatives (chi;beta = size):\n";
    for (std::size_t i = 0; i < res.full_gamma.representatives.size(); ++i)
      std::cout << "  " << point_to_string(space, res.full_gamma.representatives[i]) << " = "
                << res.full_gamma.orbit_sizes[i] << "\n";
  }
  return 0;
}

std::uint64_t commutative_count_via_orbits(std::uint32_t p, std::size_t n,
                                           std::uint64_t cap_points) {
  CpModule m = CpModule::trivial(p, n);
  ClassSpace space(m);
  SymmetryGroup g = SymmetryGroup::of_module(m);
  OrbitReport rep =
      enumerate_orbits(space, gamma_point_actions(space, g), OrbitSlice::Full, cap_points);
  return rep.orbit_count();
}

std::vector<VerificationRow> verify_rows(std::uint32_t p, const std::string& the_case,
                                         std::size_t n_override, std::uint32_t seed,
                                         std::uint64_t cap_points, std::uint64_t cap_group) {
  std::vector<std::pair<std::string, std::function<std::pair<std::uint64_t, std::uint64_t>()>>>
      tasks;
  auto add = [&](std::string id,
                 std::function<std::pair<std::uint64_t, std::uint64_t>()> task) {
    tasks.emplace_back(std::move(id), std::move(task));
  };
  std::string ps = "p=" + std::to_string(p);

  if (the_case.empty() || the_case == "commutative") {
    std::vector<std::size_t> ns = n_override ? std::vector<std::size_t>{n_override}
                                             : std::vector<std::size_t>{1, 2, 3, 4};
    for (std::size_t n : ns) {
      add("commutative-labels " + ps + " n=" + std::to_string(n), [=] {
        return std::pair{static_cast<std::uint64_t>(commutative_isoclass_count(n)),
                         static_cast<std::uint64_t>(count_labels_exhaustive(p, n))};
      });
      add("commutative-orbits " + ps + " n=" + std::to_string(n), [=] {
        return std::pair{static_cast<std::uint64_t>(commutative_isoclass_count(n)),
                         commutative_count_via_orbits(p, n, cap_points)};
      });
    }
  }
  if (the_case.empty() || the_case == "r2r1") {
    add("two-blocks-total " + ps, [=] {
      return std::pair{static_cast<std::uint64_t>(2 * p + 11),
                       isoclass_count(p, BlockProfile::parse(p, "1,1"), cap_points, cap_group).total};
    });
    add("two-blocks-partitions-agree " + ps, [=]() -> std::pair<std::uint64_t, std::uint64_t> {
      CpModule m = CpModule::from_blocks(BlockProfile::parse(p, "1,1"));
      ClassSpace space(m);
      SymmetryGroup g = SymmetryGroup::of_module(m);
      OrbitReport a =
          enumerate_orbits(space, aut_point_actions(space, g), OrbitSlice::Full, cap_points, true);
      OrbitReport full = enumerate_orbits(space, gamma_point_actions(space, g), OrbitSlice::Full,
                                          cap_points, true);
      return {1, a.point_orbit == full.point_orbit ? 1u : 0u};
    });
  }
  if (the_case.empty() || the_case == "r3") {
    add("three-block " + ps, [=] {
      std::uint64_t claim = p == 3 ? 4 : p + 9;
      return std::pair{claim,
                       isoclass_count(p, BlockProfile::parse(p, "0,0,1"), cap_points, cap_group).total};
    });
  }
  if (the_case.empty() || the_case == "c_p_squared") {
    add("rank-two-total " + ps, [=] {
      auto nontrivial = isoclass_count(p, BlockProfile::parse(p, "0,1"), cap_points, cap_group);
      auto trivial = isoclass_count(p, BlockProfile::trivial(p, 2), cap_points, cap_group);
      return std::pair{static_cast<std::uint64_t>(p + 7), nontrivial.total + trivial.total};
    });
    add("rank-two-nontrivial " + ps, [=] {
      return std::pair{static_cast<std::uint64_t>(p + 3),
                       isoclass_count(p, BlockProfile::parse(p, "0,1"), cap_points, cap_group).total};
    });
  }
  if (the_case.empty() || the_case == "order_p") {
    add("rank-one " + ps, [=] {
      return std::pair{std::uint64_t{2},
                       isoclass_count(p, BlockProfile::trivial(p, 1), cap_points, cap_group).total};
    });
  }
  if (the_case.empty() || the_case == "dims") {
    add("two-blocks-dim " + ps, [=]() -> std::pair<std::uint64_t, std::uint64_t> {
      ClassSpace s(CpModule::from_blocks(BlockProfile::parse(p, "1,1")));
      return {5, s.dim()};
    });
    add("three-block-dim " + ps, [=]() -> std::pair<std::uint64_t, std::uint64_t> {
      ClassSpace s(CpModule::from_blocks(BlockProfile::parse(p, "0,0,1")));
      return {p == 3 ? 2u : 4u, s.dim()};
    });
  }
  if (the_case == "invariance") {
    add("conjugation-invariance " + ps, [=]() -> std::pair<std::uint64_t, std::uint64_t> {
      std::mt19937 rng(seed);
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      CpModule m = CpModule::from_blocks(BlockProfile::parse(p, "1,1"));
      std::uint64_t base = classify_module(m, cap_points, cap_group).counts.total;
      for (int trial = 0; trial < 5; ++trial) {
        FpMatrix s(p, m.n(), m.n());
        do {
          for (std::size_t i = 0; i < m.n(); ++i)
            for (std::size_t j = 0; j < m.n(); ++j) s.set(i, j, d(rng));
        } while (!s.is_invertible());
        CpModule conj(p, s * m.T() * s.inverse());
        if (classify_module(conj, cap_points, cap_group).counts.total != base) return {base, 0};
      }
      return {base, base};
    });
  }

  std::vector<VerificationRow> rows(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    auto [claim, computed] = tasks[i].second();
    auto stop = std::chrono::steady_clock::now();
    rows[i] = VerificationRow{tasks[i].first, claim, computed, claim == computed,
                              std::chrono::duration<double, std::milli>(stop - start).count()};
  }
  return rows;
}

int run_verify(const std::vector<std::uint32_t>& primes, const std::string& the_case,
               std::size_t n_override, std::uint32_t seed, const std::string& format,
               unsigned threads, std::uint64_t cap_points, std::uint64_t cap_group) {
  std::vector<VerificationRow> rows;
  if (threads <= 1) {
    for (auto p : primes) {
      auto r = verify_rows(p, the_case, n_override, seed, cap_points, cap_group);
      rows.insert(rows.end(), r.begin(), r.end());
    }
  } else {
    std::vector<std::future<std::vector<VerificationRow>>> futures;
    for (auto p : primes)
      futures.push_back(std::async(std::launch::async, verify_rows, p, the_case, n_override,
                                   seed, cap_points, cap_group));
    for (auto& f : futures) {
      auto r = f.get();
      rows.insert(rows.end(), r.begin(), r.end());
    }
  }

  bool all_match = true;
  for (const auto& r : rows) all_match = all_match && r.match;
  if (format == "json") {
    // no timing field: json output is byte-identical across runs and thread counts
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"id", r.id}, {"claim", r.claim}, {"computed", r.computed}, {"match", r.match}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,claim,computed,match,ms\n";
    for (const auto& r : rows)
      std::cout << r.id << "," << r.claim << "," << r.computed << "," << (r.match ? 1 : 0) << ","
                << static_cast<std::uint64_t>(r.ms) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.id.size());
    for (const auto& r : rows)
      std::cout << std::left << std::setw(static_cast<int>(width) + 2) << r.id << " claim "
                << std::setw(6) << r.claim << " computed " << std::setw(6) << r.computed << " "
                << (r.match ? "ok" : "MISMATCH") << " (" << static_cast<std::uint64_t>(r.ms)
                << " ms)\n";
    std::cout << (all_match ? "all rows match\n" : "MISMATCHES FOUND\n");
  }
  return all_match ? 0 : 1;
}

int run_export(std::uint32_t p, const std::string& blocks, std::size_t n,
               const std::string& point_text, const std::string& out) {
  CpModule m = module_from_options(p, blocks, n);
  ClassSpace space(m);
  ClassPoint pt = parse_point(space, point_text);
  HopfStructure h = build_hopf(space, pt);
  AxiomReport rep = check_axioms(h);
  std::string text = hopf_to_json(h, rep);
  validate_hopf_json(text);
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << text << "\n";
  }
  if (!rep.pass) {
    std::cerr << "axiom check failed: " << rep.to_string() << "\n";
    return 1;
  }
  return 0;
}

int run_profile_list(std::uint32_t p, std::size_t n, const std::string& format) {
  if (n == 0) throw CLI::ValidationError("--n is required");
  json j = json::array();
  for (const auto& prof : BlockProfile::all_of_rank(p, n)) {
    CpModule m = CpModule::from_blocks(prof);
    ClassSpace s(m);
    SymmetryGroup g = SymmetryGroup::of_module(m);
    if (format == "json") {
      j.push_back({{"blocks", prof.to_string()},
                   {"chi_dim", s.chi_dim()},
                   {"alt_dim", s.alt_dim()},
                   {"aut_order", g.aut_order()}});
    } else {
      std::cout << "blocks " << std::left << std::setw(10) << prof.to_string() << " chi dim "
                << s.chi_dim() << "  alt dim " << s.alt_dim() << "  |A| = " << g.aut_order()
                << "\n";
    }
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return 0;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    unsigned long v = std::stoul(item);
    if (!is_odd_prime(static_cast<std::uint32_t>(v)))
      throw CLI::ValidationError("p must be an odd prime, got " + item);
    primes.push_back(static_cast<std::uint32_t>(v));
  }
  if (primes.empty()) throw CLI::ValidationError("no primes given");
  return primes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of Hopf algebra extensions of kC_p by k^G"};
  app.require_subcommand(1);

  std::string p_text = "3";
  std::string blocks;
  std::size_t n = 0;
  std::string format = "table";
  std::string point_text;
  std::string out;
  std::string the_case;
  std::uint32_t seed = 1;
  unsigned threads = 1;
  std::uint64_t cap_points = hopfext::kDefaultPointCap;
  std::uint64_t cap_group = hopfext::kDefaultGroupCap;

  auto add_common = [&](CLI::App* cmd, bool needs_module) {
    cmd->add_option("--p", p_text, "odd prime (verify accepts a comma list)");
    if (needs_module) {
      cmd->add_option("--blocks", blocks, "block profile m1,m2,... (sizes 1..p)");
      cmd->add_option("--n", n, "rank with the trivial action");
    }
    cmd->add_option("--format", format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--threads", threads, "worker threads (1 = reference mode)")
        ->check(CLI::Range(1u, 64u));
    cmd->add_option("--seed", seed, "seed for randomized rows");
    cmd->add_option("--cap-points", cap_points, "orbit enumeration point cap");
    cmd->add_option("--cap-group", cap_group, "group enumeration cap");
  };

  CLI::App* classify = app.add_subcommand("classify", "count isoclasses for one action class");
  add_common(classify, true);

  CLI::App* verify = app.add_subcommand("verify", "run the verification matrix");
  add_common(verify, true);
  verify->add_option("--case", the_case,
                     "commutative | r2r1 | r3 | c_p_squared | order_p | dims | invariance");

  CLI::App* export_cmd = app.add_subcommand("export", "emit structure constants as JSON");
  add_common(export_cmd, true);
  export_cmd->add_option("--point", point_text, "class point 'chi;beta' coordinate lists")
      ->required();
  export_cmd->add_option("--out", out, "output file (default stdout)");

  CLI::App* profiles = app.add_subcommand("profile-list", "list block profiles of a rank");
  add_common(profiles, true);

  try {
    app.parse(argc, argv);
    std::uint32_t p0 = parse_primes(p_text)[0];
    if (classify->parsed())
      return run_classify(p0, blocks, n, format, cap_points, cap_group);
    if (verify->parsed())
      return run_verify(parse_primes(p_text), the_case, n, seed, format, threads, cap_points,
                        cap_group);
    if (export_cmd->parsed()) return run_export(p0, blocks, n, point_text, out);
    if (profiles->parsed()) return run_profile_list(p0, n, format);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hopfext::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
