#pragma once

#include <filesystem>
#include <string>

#include "scw/instance.hpp"
#include "scw/known_optimum.hpp"

namespace scw::io {

/// Instance files are JSON with top-level fields `n`, `name`, `sets`;
/// each set is {"elements": [ints], "weight": int | "p/q"}. The
/// canonical writer keeps sets in input order, elements ascending and
/// weights in lowest terms, so serialization is byte-stable.
std::string instance_to_json(const SetCoverInstance& inst);
SetCoverInstance instance_from_json(const std::string& text);

SetCoverInstance load_instance(const std::filesystem::path& file);
void save_instance(const SetCoverInstance& inst, const std::filesystem::path& file);

/// Optimum sidecars record the planted disjoint k-set optimum:
/// {"instance": name, "value": "p/q", "sets": [{"elements", "weight"}]}.
/// By convention the sidecar of FILE lives at FILE + ".opt".
std::string optimum_to_json(const std::string& instance_name, const KnownOptimum& opt);
KnownOptimum optimum_from_json(const std::string& text, int n);

KnownOptimum load_optimum(const std::filesystem::path& file, int n);
void save_optimum(const std::string& instance_name, const KnownOptimum& opt,
                  const std::filesystem::path& file);

std::filesystem::path sidecar_path(const std::filesystem::path& instance_file);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, const std::string& content);

}  // namespace scw::io
