#include "gwc/cache_io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace gwc {

using nlohmann::json;

namespace {

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<Integer> read_integers(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) {
    const std::string s = x.get<std::string>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::runtime_error("bad integer '" + s + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string table_file_name(int degree) { return "chartab-v1-d" + std::to_string(degree) + ".json"; }

void store_table(const std::filesystem::path& dir, const CharacterTable& t) {
  std::filesystem::create_directories(dir);
  json j;
  j["version"] = 1;
  j["degree"] = t.degree;
  j["partitions"] = t.partitions;
  j["dim"] = integers(t.dim);
  j["class_size"] = integers(t.class_size);
  j["chi"] = integers(t.chi);
  const auto path = dir / table_file_name(t.degree);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<CharacterTable> load_table(const std::filesystem::path& dir, int degree, const Warn& warn) {
  const auto path = dir / table_file_name(degree);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto reject = [&](const std::string& why) -> std::optional<CharacterTable> {
    if (warn) warn("ignoring cached table " + path.string() + ": " + why);
    return std::nullopt;
  };
  try {
    const json j = json::parse(in);
    if (j.at("version").get<int>() != 1) return reject("unsupported version");
    CharacterTable t;
    t.degree = j.at("degree").get<int>();
    if (t.degree != degree) return reject("degree mismatch");
    t.partitions = j.at("partitions").get<std::vector<Partition>>();
    t.dim = read_integers(j.at("dim"));
    t.class_size = read_integers(j.at("class_size"));
    t.chi = read_integers(j.at("chi"));
    if (!t.consistent()) return reject("failed the sum dim^2 = d! validation");
    return t;
  } catch (const std::exception& e) {
    return reject(e.what());
  }
}

TablePersistence directory_persistence(const std::filesystem::path& dir, Warn warn) {
  TablePersistence p;
  p.load = [dir, warn](int d) { return load_table(dir, d, warn); };
  p.store = [dir, warn](const CharacterTable& t) {
    try {
      store_table(dir, t);
    } catch (const std::exception& e) {
      if (warn) warn(std::string("could not store character table: ") + e.what());
    }
  };
  return p;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("GWC_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace gwc
