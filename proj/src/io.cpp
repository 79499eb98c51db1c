#include "scw/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace scw::io {

using nlohmann::ordered_json;

namespace {

ordered_json weight_json(const Rational& w) {
  if (w.is_integer()) {
    if (w.numerator() >= std::numeric_limits<std::int64_t>::min() &&
        w.numerator() <= std::numeric_limits<std::int64_t>::max()) {
      return w.numerator().convert_to<std::int64_t>();
    }
  }
  return w.str_compact();
}

Rational weight_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    if (r) return *r;
  }
  throw std::invalid_argument("weight must be an integer or a \"p/q\" string");
}

std::vector<SetEntry> sets_from_json(const ordered_json& arr) {
  std::vector<SetEntry> sets;
  for (const auto& js : arr) {
    SetEntry e;
    e.elements = js.at("elements").get<std::vector<int>>();
    e.weight = weight_from_json(js.at("weight"));
    sets.push_back(std::move(e));
  }
  return sets;
}

ordered_json sets_to_json(const std::vector<SetEntry>& sets) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : sets) {
    ordered_json js;
    js["elements"] = s.elements;
    js["weight"] = weight_json(s.weight);
    arr.push_back(std::move(js));
  }
  return arr;
}

}  // namespace

std::string instance_to_json(const SetCoverInstance& inst) {
  ordered_json j;
  j["n"] = inst.n();
  j["name"] = inst.name();
  j["sets"] = sets_to_json(inst.sets());
  return j.dump(2) + "\n";
}

SetCoverInstance instance_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  return SetCoverInstance(j.at("n").get<int>(), sets_from_json(j.at("sets")),
                          j.value("name", std::string("unnamed")));
}

SetCoverInstance load_instance(const std::filesystem::path& file) {
  return instance_from_json(read_file(file));
}

void save_instance(const SetCoverInstance& inst, const std::filesystem::path& file) {
  write_file(file, instance_to_json(inst));
}

std::string optimum_to_json(const std::string& instance_name, const KnownOptimum& opt) {
  ordered_json j;
  j["instance"] = instance_name;
  j["value"] = opt.value().str_compact();
  j["sets"] = sets_to_json(opt.columns());
  return j.dump(2) + "\n";
}

KnownOptimum optimum_from_json(const std::string& text, int n) {
  ordered_json j = ordered_json::parse(text);
  KnownOptimum opt(n, sets_from_json(j.at("sets")));
  if (j.contains("value")) {
    auto v = Rational::parse(j.at("value").get<std::string>());
    if (!v || *v != opt.value()) {
      throw std::invalid_argument("optimum sidecar: recorded value disagrees with set weights");
    }
  }
  return opt;
}

KnownOptimum load_optimum(const std::filesystem::path& file, int n) {
  return optimum_from_json(read_file(file), n);
}

void save_optimum(const std::string& instance_name, const KnownOptimum& opt,
                  const std::filesystem::path& file) {
  write_file(file, optimum_to_json(instance_name, opt));
}

std::filesystem::path sidecar_path(const std::filesystem::path& instance_file) {
  std::filesystem::path p = instance_file;
  p += ".opt";
  return p;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
}

}  // namespace scw::io
