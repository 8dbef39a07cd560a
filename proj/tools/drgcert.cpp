// drgcert: build, transform, and certify the distance-regular graphs handled
// by this package (the cross-product graph Z over GF(q), dual polar graphs of
// types B3 and D4, and their far-from-vertex / far-from-edge subgraphs).
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "drgcert/certify.hpp"
#include "drgcert/errors.hpp"
#include "drgcert/gf.hpp"
#include "drgcert/graph.hpp"
#include "drgcert/graph6.hpp"
#include "drgcert/quadgeom.hpp"
#include "drgcert/zgraph.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace drg;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UnsupportedQ : Error {
  explicit UnsupportedQ(const std::string& w) : Error(w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(w) {}
};

bool is_prime_power(uint64_t q) {
  if (q < 2) return false;
  for (uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;  // q itself is prime
}

// Documented bounds: z up to q=5; geometric families up to q=3, q=4 behind
// --force (the D4 enumeration at q=4 is minutes of work, not seconds).
void require_supported(const std::string& family, uint64_t q, bool force) {
  if (!is_prime_power(q))
    throw UnsupportedQ("q=" + std::to_string(q) + " is not a prime power");
  const bool geometric = family != "z";
  const uint64_t bound = geometric ? (force ? 4 : 3) : 5;
  if (q > bound)
    throw UnsupportedQ("family " + family + " supports q <= " +
                       std::to_string(bound) +
                       (geometric && !force ? " (q=4 requires --force)" : "") +
                       ", got q=" + std::to_string(q));
}

graph::Graph build_family(const std::string& family, uint64_t q) {
  if (family == "z") return zg::build_z(q);
  if (family == "b3") return geom::dual_polar_b3(q);
  if (family == "d4") return geom::dual_polar_d4(q);
  if (family == "b3far") return geom::far_from_vertex_b3(q);
  if (family == "d4far") return geom::far_from_edge_d4(q);
  throw Error("unknown family: " + family);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& data) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << data;
  if (!out) throw IoError("write failed for " + p.string());
}

// z2.g6 -> z2; dir/x.foo -> dir/x.foo (only a trailing .g6 is stripped).
std::string artifact_stem(const std::string& out) {
  if (out.size() > 3 && out.substr(out.size() - 3) == ".g6")
    return out.substr(0, out.size() - 3);
  return out;
}

std::string labels_json(const graph::Graph& g) {
  json j = json::array();
  for (size_t i = 0; i < g.n(); ++i) j.push_back(g.labels()[i]);
  return j.dump(2) + "\n";
}

bool has_real_labels(const graph::Graph& g) {
  for (const std::string& l : g.labels())
    if (!l.empty()) return true;
  return false;
}

void write_artifacts(const graph::Graph& g, const std::string& out,
                     const json& provenance) {
  const std::string stem = artifact_stem(out);
  write_file(out, graph::graph6_encode(g) + "\n");
  if (has_real_labels(g)) write_file(stem + ".labels.json", labels_json(g));
  write_file(stem + ".provenance.json", provenance.dump(2) + "\n");
}

std::optional<fs::path> cache_root(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("DRGCERT_CACHE_DIR"); env && *env)
    return fs::path(env);
  return std::nullopt;
}

// Build artifacts are cached under a key derived from the job parameters;
// cached bytes are trusted only if their recorded content hash still matches.
struct CachedBuild {
  std::string g6;
  std::string labels;  // empty when the family carries no labels
};

std::optional<CachedBuild> cache_load(const fs::path& root, const std::string& key) {
  const fs::path base = root / key;
  const fs::path sum = base.string() + ".sum";
  if (!fs::exists(sum)) return std::nullopt;
  std::istringstream in(read_file(sum));
  std::string hg6, hlab;
  in >> hg6 >> hlab;
  CachedBuild c;
  const fs::path g6p = base.string() + ".g6";
  if (!fs::exists(g6p)) return std::nullopt;
  c.g6 = read_file(g6p);
  if (hex64(fnv1a(c.g6)) != hg6) return std::nullopt;
  const fs::path labp = base.string() + ".labels.json";
  if (fs::exists(labp)) {
    c.labels = read_file(labp);
    if (hex64(fnv1a(c.labels)) != hlab) return std::nullopt;
  } else if (hlab != "-") {
    return std::nullopt;
  }
  return c;
}

void cache_store(const fs::path& root, const std::string& key, const CachedBuild& c) {
  fs::create_directories(root);
  const fs::path base = root / key;
  write_file(base.string() + ".g6", c.g6);
  std::string hlab = "-";
  if (!c.labels.empty()) {
    write_file(base.string() + ".labels.json", c.labels);
    hlab = hex64(fnv1a(c.labels));
  }
  write_file(base.string() + ".sum", hex64(fnv1a(c.g6)) + " " + hlab + "\n");
}

json build_provenance(const std::string& family, uint64_t q,
                      const graph::Graph& g) {
  const gf::Field& f = gf::field_new(q);
  json j;
  j["tool"] = "drgcert";
  j["version"] = kVersion;
  j["family"] = family;
  j["q"] = q;
  j["modulus"] = f.modulus_string();
  j["n"] = g.n();
  j["edges"] = g.edge_count();
  return j;
}

graph::Graph load_graph(const std::string& path) {
  std::string data = read_file(path);
  while (!data.empty() && (data.back() == '\n' || data.back() == '\r'))
    data.pop_back();
  return graph::graph6_decode(data);
}

int cmd_build(const std::string& family, uint64_t q, std::string out,
              const std::string& cache_dir, bool force) {
  require_supported(family, q, force);
  if (out.empty()) out = family + std::to_string(q) + ".g6";

  const std::string key =
      "build-" + family + "-q" + std::to_string(q) + "-v" + kVersion;
  const auto root = cache_root(cache_dir);

  if (root) {
    if (auto hit = cache_load(*root, key)) {
      graph::Graph g = graph::graph6_decode(
          hit->g6.substr(0, hit->g6.find_first_of("\r\n")));
      const std::string stem = artifact_stem(out);
      write_file(out, hit->g6);
      if (!hit->labels.empty()) write_file(stem + ".labels.json", hit->labels);
      write_file(stem + ".provenance.json",
                 build_provenance(family, q, g).dump(2) + "\n");
      std::cout << out << ": n=" << g.n() << " edges=" << g.edge_count()
                << " (cached)\n";
      return 0;
    }
  }

  graph::Graph g = build_family(family, q);
  write_artifacts(g, out, build_provenance(family, q, g));
  if (root) {
    CachedBuild c{graph::graph6_encode(g) + "\n",
                  has_real_labels(g) ? labels_json(g) : ""};
    cache_store(*root, key, c);
  }
  std::cout << out << ": n=" << g.n() << " edges=" << g.edge_count() << "\n";
  return 0;
}

int cmd_transform(const std::string& in, const std::string& ops_csv,
                  std::string out) {
  std::vector<std::string> ops;
  std::istringstream ss(ops_csv);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) ops.push_back(tok);
  if (ops.empty()) throw Error("no transform ops given");

  graph::Graph g = load_graph(in);
  for (const std::string& op : ops) {
    if (op == "bd") g = graph::bipartite_double(g);
    else if (op == "ebd") g = graph::extended_bipartite_double(g);
    else if (op == "halve") g = graph::halved_graph(g, 0);
    else if (op == "dist12") g = graph::distance_1_or_2(g);
    else throw Error("unknown transform op: " + op);
  }

  if (out.empty()) {
    std::string suffix;
    for (const std::string& op : ops) suffix += "-" + op;
    out = artifact_stem(in) + suffix + ".g6";
  }

  json prov;
  prov["tool"] = "drgcert";
  prov["version"] = kVersion;
  prov["source"] = in;
  prov["ops"] = ops;
  prov["n"] = g.n();
  prov["edges"] = g.edge_count();
  const fs::path parent = artifact_stem(in) + ".provenance.json";
  if (fs::exists(parent)) prov["parent"] = json::parse(read_file(parent));
  write_artifacts(g, out, prov);
  std::cout << out << ": n=" << g.n() << " edges=" << g.edge_count() << "\n";
  return 0;
}

int cmd_certify(const std::string& in, const std::string& expect,
                const std::string& report_path, uint64_t sample,
                uint32_t jobs) {
  graph::Graph g = load_graph(in);

  std::optional<std::pair<cert::Family, uint64_t>> exp;
  if (!expect.empty()) {
    const auto colon = expect.find(':');
    if (colon == std::string::npos)
      throw Error("--expect wants family:q, e.g. z:2");
    const std::string fam = expect.substr(0, colon);
    const uint64_t q = std::stoull(expect.substr(colon + 1));
    auto parsed = cert::family_from_string(fam);
    if (!parsed)
      throw Error("unknown expect family: " + fam +
                  " (one of z, ebdz, d4far, b3, srghalf)");
    if (!is_prime_power(q))
      throw UnsupportedQ("q=" + std::to_string(q) + " is not a prime power");
    exp = {*parsed, q};
  }

  cert::CertReport rep = cert::certify_graph(g, in, exp, sample, jobs);
  json j = rep.to_json();
  if (!expect.empty()) j["expect"] = expect;

  const std::string text = j.dump(2) + "\n";
  if (!report_path.empty()) write_file(report_path, text);
  else std::cout << text;

  if (!rep.all_pass()) {
    std::cerr << in << ": certification FAILED\n";
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "  " << c.name << ": " << c.witness << "\n";
    return 1;
  }
  std::cout << in << ": all checks passed";
  if (rep.array) std::cout << " array=" << *rep.array;
  std::cout << "\n";
  return 0;
}

// One entry of the paper-suite report.
json suite_check(const std::string& name, const geom::CheckReport& r) {
  json j;
  j["name"] = name;
  j["pass"] = r.pass;
  if (!r.pass) j["witness"] = r.detail;
  return j;
}

json suite_certify(const std::string& name, const graph::Graph& g,
                   cert::Family fam, uint64_t q, uint32_t jobs) {
  cert::CertReport rep =
      cert::certify_graph(g, name, std::make_pair(fam, q), 0, jobs);
  json j;
  j["name"] = name;
  j["pass"] = rep.all_pass();
  j["report"] = rep.to_json();
  return j;
}

int cmd_paper_suite(const std::vector<uint64_t>& qs,
                    const std::string& report_path, uint32_t jobs) {
  for (uint64_t q : qs) require_supported("z", q, false);

  json results = json::array();
  bool all_pass = true;
  auto add = [&](json& checks, json entry) {
    all_pass = all_pass && entry["pass"].get<bool>();
    checks.push_back(std::move(entry));
  };

  for (uint64_t q : qs) {
    json checks = json::array();
    const gf::Field& f = gf::field_new(q);

    graph::Graph z = zg::build_z(q);
    add(checks, suite_certify("z_certify", z, cert::Family::Z, q, jobs));

    {
      // distance classifier vs BFS from the origin vertex
      auto dist = graph::bfs_distances(z, 0);
      bool ok = true;
      std::string wit;
      for (uint64_t id = 0; id < z.n() && ok; ++id) {
        auto [u, up] = zg::vertex_of_id(f, id);
        if (zg::z_distance_class(f, u, up) != uint32_t(dist[id])) {
          ok = false;
          wit = "vertex " + std::to_string(id);
        }
      }
      json j;
      j["name"] = "z_distance_class_oracle";
      j["pass"] = ok;
      if (!ok) j["witness"] = wit;
      add(checks, std::move(j));
    }

    const bool geometric = q <= 3;
    if (geometric) {
      graph::Graph ebd = graph::extended_bipartite_double(z);
      add(checks, suite_certify("ebd_z_certify", ebd, cert::Family::EbdZ, q, jobs));

      graph::Graph d12 = graph::distance_1_or_2(z);
      add(checks,
          suite_certify("dist12_srg", d12, cert::Family::SrgHalf, q, jobs));
      {
        graph::Graph half = graph::halved_graph(ebd, 0);
        const bool same = half.n() == d12.n() && half.edges() == d12.edges();
        json j;
        j["name"] = "halved_ebd_equals_dist12";
        j["pass"] = same;
        if (!same) j["witness"] = "edge sets differ under the identity map";
        add(checks, std::move(j));
      }

      graph::Graph d4far = geom::far_from_edge_d4(q);
      add(checks,
          suite_certify("d4far_certify", d4far, cert::Family::D4Far, q, jobs));

      graph::Graph b3 = geom::dual_polar_b3(q);
      add(checks,
          suite_certify("b3_certify", b3, cert::Family::B3DualPolar, q, jobs));

      graph::Graph b3far = geom::far_from_vertex_b3(q);
      add(checks,
          suite_certify("b3far_certify", b3far, cert::Family::Z, q, jobs));

      add(checks, suite_check("b3far_z_iso", zg::verify_b3far_z_iso(q)));
      add(checks,
          suite_check("reflection_quotient", geom::reflection_quotient_check(q)));
      add(checks,
          suite_check("ebd_correspondence", geom::ebd_correspondence_check(q)));
      add(checks,
          suite_check("nonorthogonality", geom::nonorthogonality_check(q)));
      if (q == 2) {
        add(checks,
            suite_check("alt_kernel_basis", zg::verify_alt_kernel_basis(q)));
        add(checks,
            suite_check("alt_det_identity", zg::verify_alt_det_identity(q)));
      }
    }

    json entry;
    entry["q"] = q;
    entry["geometric_checks"] = geometric;
    entry["checks"] = std::move(checks);
    results.push_back(std::move(entry));
  }

  json j;
  j["suite"] = "paper";
  j["version"] = kVersion;
  j["qs"] = qs;
  j["pass"] = all_pass;
  j["results"] = std::move(results);

  const std::string text = j.dump(2) + "\n";
  if (!report_path.empty()) write_file(report_path, text);
  else std::cout << text;

  std::cerr << "paper-suite: " << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? 0 : 1;
}

std::vector<uint64_t> parse_q_list(const std::string& csv) {
  std::vector<uint64_t> qs;
  std::istringstream ss(csv);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) qs.push_back(std::stoull(tok));
  if (qs.empty()) throw Error("empty q list");
  return qs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"build and certify distance-regular graphs over GF(q)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string family, out, cache_dir, in, ops, expect, report, q_list = "2";
  uint64_t q = 2, sample = 0;
  uint32_t jobs = 0;
  bool force = false;

  CLI::App* b = app.add_subcommand("build", "construct a family member");
  b->add_option("family", family, "one of z, b3, d4, b3far, d4far")->required();
  b->add_option("--q", q, "field order (prime power)")->required();
  b->add_option("--out", out, "output path (default <family><q>.g6)");
  b->add_option("--cache-dir", cache_dir, "artifact cache directory");
  b->add_flag("--force", force, "allow q=4 for geometric families");

  CLI::App* t = app.add_subcommand("transform", "apply graph transforms");
  t->add_option("input", in, "input graph6 file")->required();
  t->add_option("--ops", ops, "comma list of bd, ebd, halve, dist12")->required();
  t->add_option("--out", out, "output path");

  CLI::App* c = app.add_subcommand("certify", "certify a graph from file");
  c->add_option("input", in, "input graph6 file")->required();
  c->add_option("--expect", expect, "expected family:q, e.g. z:2");
  c->add_option("--report", report, "write JSON report here (default stdout)");
  c->add_option("--sample", sample,
                "check this many random extra bases instead of all (0 = all)");
  c->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  CLI::App* p = app.add_subcommand("paper-suite", "run the full check suite");
  p->add_option("--q", q_list, "comma list of field orders (default 2)");
  p->add_option("--report", report, "write JSON report here (default stdout)");
  p->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*b) return cmd_build(family, q, out, cache_dir, force);
    if (*t) return cmd_transform(in, ops, out);
    if (*c) return cmd_certify(in, expect, report, sample, jobs);
    if (*p) return cmd_paper_suite(parse_q_list(q_list), report, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
