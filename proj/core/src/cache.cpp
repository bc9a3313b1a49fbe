#include "deltafn/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace deltafn {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string s;
    for (std::size_t c = 0; c < m.cols(); ++c) s.push_back(static_cast<char>('0' + m(r, c)));
    rows.push_back(s);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Matrix matrix_from_json(const json& j, int p) {
  Matrix m(p, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& data = j.at("data");
  if (data.size() != m.rows()) throw CacheError("cache: matrix row count mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto s = data[r].get<std::string>();
    if (s.size() != m.cols()) throw CacheError("cache: matrix column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const int v = s[c] - '0';
      if (v < 0 || v >= p) throw CacheError("cache: matrix entry out of range");
      m.set(r, c, v);
    }
  }
  return m;
}

json module_to_json(const Rep& a) {
  json gens = json::array();
  for (const auto& g : a.gen_images()) gens.push_back(matrix_to_json(g));
  return json{{"dim", a.dim()}, {"generators", gens}};
}

Rep module_from_json(const json& j, const TablePtr& base) {
  std::vector<Matrix> imgs;
  for (const auto& g : j.at("generators")) imgs.push_back(matrix_from_json(g, base->p()));
  return make_rep(base, std::move(imgs), j.at("dim").get<std::size_t>());
}

std::string table_checksum(const MonoidTable& G) {
  std::string keys;
  for (ElemId i = 0; i < static_cast<ElemId>(G.size()); ++i) keys += std::to_string(G.key_of(G.element(i))) + ",";
  return fnv1a(keys);
}

void write_file(const fs::path& path, const json& data) {
  const std::string payload = data.dump();
  json doc{{"schema", kCacheSchema}, {"checksum", fnv1a(payload)}, {"data", data}};
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CacheError("cache: cannot write " + tmp.string());
    out << doc.dump(1) << "\n";
  }
  fs::rename(tmp, path);
}

json read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cache: missing " + path.string() + "; run `deltafn build` first");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception&) {
    throw CacheError("cache: " + path.string() + " is not valid JSON");
  }
  if (!doc.contains("schema") || doc["schema"] != kCacheSchema)
    throw CacheError("cache: " + path.string() + " has an unknown schema");
  if (!doc.contains("data") || !doc.contains("checksum") || doc["checksum"] != fnv1a(doc["data"].dump()))
    throw CacheError("cache: checksum mismatch in " + path.string());
  return doc["data"];
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return "cache";
}

fs::path cache_path(const fs::path& root, int p, int n) { return root / std::to_string(p) / std::to_string(n); }

CacheStatus check_cache(const fs::path& root, int p, int n) {
  CacheStatus st;
  const fs::path dir = cache_path(root, p, n);
  if (!fs::exists(dir / "monoid.json") || !fs::exists(dir / "simples.json")) {
    st.message = "no cache at " + dir.string();
    return st;
  }
  try {
    const json m = read_file(dir / "monoid.json");
    if (m.at("p") != p || m.at("n") != n) throw CacheError("cache: parameters do not match the directory");
    read_file(dir / "simples.json");
    if (fs::exists(dir / "pims.json")) {
      read_file(dir / "pims.json");
      st.has_pims = true;
    }
    st.state = CacheState::Valid;
    st.message = "valid cache at " + dir.string();
  } catch (const std::exception& e) {
    st.state = CacheState::Corrupt;
    st.message = e.what();
  }
  return st;
}

bool write_cache(Context& ctx, const fs::path& root) {
  const int p = ctx.p(), n = ctx.n();
  if (check_cache(root, p, n).state == CacheState::Valid) {
    // a valid cache must also describe the same table
    const json m = read_file(cache_path(root, p, n) / "monoid.json");
    if (m.at("table_checksum") == table_checksum(*ctx.table())) return false;
  }
  const fs::path dir = cache_path(root, p, n);
  fs::create_directories(dir);
  const auto& G = *ctx.table();
  json gens = json::array();
  for (ElemId g : G.generators()) gens.push_back(matrix_to_json(G.element(g)));
  write_file(dir / "monoid.json", json{{"p", p},
                                       {"n", n},
                                       {"name", G.name()},
                                       {"size", G.size()},
                                       {"generators", gens},
                                       {"table_checksum", table_checksum(G)}});
  auto& reg = ctx.simples();
  json simples = json::array();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    json e = module_to_json(reg.simple(i));
    e["name"] = reg.name(i);
    simples.push_back(e);
  }
  write_file(dir / "simples.json", json{{"count", reg.size()}, {"modules", simples}});
  fs::remove(dir / "pims.json");
  if (ctx.pims_feasible()) {
    auto& pims = ctx.pims();
    json mods = json::array();
    for (std::size_t i = 0; i < pims.size(); ++i) {
      json e = module_to_json(pims.pim(i));
      e["name"] = pims.name(i);
      e["multiplicity"] = pims.multiplicity(i);
      mods.push_back(e);
    }
    write_file(dir / "pims.json", json{{"modules", mods}, {"cartan", pims.cartan()}});
  }
  return true;
}

void load_cache(Context& ctx, const fs::path& root) {
  const int p = ctx.p(), n = ctx.n();
  const fs::path dir = cache_path(root, p, n);
  const json m = read_file(dir / "monoid.json");
  if (m.at("table_checksum") != table_checksum(*ctx.table()) || m.at("size") != ctx.table()->size())
    throw CacheError("cache: table in " + dir.string() + " does not match " + ctx.label());
  const json s = read_file(dir / "simples.json");
  auto reg = std::make_unique<SimpleRegistry>(ctx.table());
  for (const auto& e : s.at("modules")) {
    const std::size_t before = reg->size();
    const std::size_t id = reg->intern(module_from_json(e, ctx.table()));
    if (id != before) throw CacheError("cache: duplicate simple module in " + dir.string());
    reg->set_name(id, e.at("name").get<std::string>());
  }
  if (reg->size() != ctx.expected_simple_count()) throw CacheError("cache: wrong number of simples");
  reg->mark_saturated();
  std::unique_ptr<PimRegistry> pims;
  if (fs::exists(dir / "pims.json")) {
    const json pj = read_file(dir / "pims.json");
    std::vector<Rep> covers;
    std::vector<int> mult;
    for (const auto& e : pj.at("modules")) {
      covers.push_back(module_from_json(e, ctx.table()));
      mult.push_back(e.at("multiplicity").get<int>());
    }
    pims = std::make_unique<PimRegistry>(*reg, std::move(covers), std::move(mult), ctx.rng(), ctx.meataxe());
    if (pims->cartan() != pj.at("cartan").get<std::vector<std::vector<int>>>())
      throw CacheError("cache: Cartan matrix does not match the stored covers");
  }
  ctx.install(std::move(reg), std::move(pims));
}

}  // namespace deltafn
