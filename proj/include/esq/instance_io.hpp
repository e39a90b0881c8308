#pragma once

// JSON documents for instances, query batches and answers. The grammar is
// described in docs/FORMAT.md.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esq/engine.hpp"

namespace esq {

/// Thrown for unreadable files and malformed documents.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& in);
std::vector<Point2> queries_from_json(const nlohmann::json& j);
nlohmann::json queries_to_json(const std::vector<Point2>& qs);
nlohmann::json answer_to_json(const QueryAnswer& a);
QueryAnswer answer_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::string& path);
/// Writes with a trailing newline; throws FormatError on I/O failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace esq
