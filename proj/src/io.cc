/*
 * Copyright 2026 The uarank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "uarank/io.h"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"

namespace uarank {
namespace {

using json = nlohmann::json;

std::optional<double> ParseDouble(absl::string_view field) {
  field = absl::StripAsciiWhitespace(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    return std::nullopt;
  }
  return v;
}

absl::Status ParseError(int line, int column, absl::string_view field) {
  return absl::InvalidArgumentError(
      absl::StrFormat("line %d, column %d: cannot parse '%s' as a number",
                      line, column, absl::StripAsciiWhitespace(field)));
}

template <typename T>
absl::StatusOr<T> Field(const json& obj, const char* key,
                        const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: missing field '%s'", where, key));
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: field '%s' has the wrong type", where, key));
  }
}

}  // namespace

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot open '%s'", path));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::StatusOr<PredictionMatrix> ParsePredictionCsv(std::string_view raw) {
  const absl::string_view text(raw.data(), raw.size());
  std::vector<std::vector<double>> rows;
  int width = -1;
  bool first = true;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    const std::vector<absl::string_view> fields = absl::StrSplit(line, ',');

    // The first non-blank line is a header when none of its fields is
    // numeric.
    if (first) {
      first = false;
      bool any_numeric = false;
      for (absl::string_view f : fields) any_numeric |= ParseDouble(f).has_value();
      if (!any_numeric) {
        width = static_cast<int>(fields.size());
        continue;
      }
    }
    if (width >= 0 && static_cast<int>(fields.size()) != width) {
      return absl::InvalidArgumentError(
          absl::StrFormat("line %d has %d fields, expected %d", line_no,
                          fields.size(), width));
    }
    width = static_cast<int>(fields.size());
    std::vector<double> row;
    row.reserve(fields.size());
    for (size_t c = 0; c < fields.size(); ++c) {
      const std::optional<double> v = ParseDouble(fields[c]);
      if (!v.has_value()) {
        return ParseError(line_no, static_cast<int>(c) + 1, fields[c]);
      }
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    return absl::InvalidArgumentError("prediction CSV has no data rows");
  }
  return PredictionMatrix::Create(rows);
}

absl::StatusOr<PredictionMatrix> LoadPredictionMatrix(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<PredictionMatrix> p = ParsePredictionCsv(*text);
  if (!p.ok()) {
    return absl::Status(p.status().code(),
                        absl::StrFormat("%s: %s", path, p.status().message()));
  }
  return p;
}

std::string FormatPredictionCsv(const PredictionMatrix& p) {
  std::string out;
  for (int l = 0; l < p.num_labels(); ++l) {
    absl::StrAppendFormat(&out, "%slabel_%d", l == 0 ? "" : ",", l + 1);
  }
  out += "\n";
  out += FormatMatrixCsv(p.matrix());
  return out;
}

std::string FormatMatrixCsv(const Matrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      absl::StrAppendFormat(&out, "%s%.17g", c == 0 ? "" : ",", m(r, c));
    }
    out += "\n";
  }
  return out;
}

absl::StatusOr<PopulationModel> ParsePopulationModel(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError("population model is not valid JSON");
  }
  absl::StatusOr<int> labels = Field<int>(doc, "labels", "model");
  if (!labels.ok()) return labels.status();
  if (!doc.contains("types") || !doc["types"].is_array()) {
    return absl::InvalidArgumentError("model: 'types' must be a list");
  }

  std::vector<PopulationType> types;
  std::map<std::string, int> type_index;
  for (const json& entry : doc["types"]) {
    const std::string where = absl::StrFormat("type %d", types.size() + 1);
    PopulationType t;
    absl::StatusOr<std::string> name = Field<std::string>(entry, "name", where);
    if (!name.ok()) return name.status();
    absl::StatusOr<double> weight = Field<double>(entry, "weight", where);
    if (!weight.ok()) return weight.status();
    absl::StatusOr<std::vector<double>> truth =
        Field<std::vector<double>>(entry, "groundTruth", where);
    if (!truth.ok()) return truth.status();
    absl::StatusOr<std::vector<double>> pred =
        Field<std::vector<double>>(entry, "predicted", where);
    if (!pred.ok()) return pred.status();
    t.name = *name;
    t.weight = *weight;
    t.ground_truth = *std::move(truth);
    t.predicted = *std::move(pred);
    type_index.emplace(t.name, static_cast<int>(types.size()));
    types.push_back(std::move(t));
  }

  std::vector<PopulationGroup> groups;
  if (doc.contains("groups")) {
    if (!doc["groups"].is_array()) {
      return absl::InvalidArgumentError("model: 'groups' must be a list");
    }
    for (const json& entry : doc["groups"]) {
      const std::string where = absl::StrFormat("group %d", groups.size() + 1);
      absl::StatusOr<std::string> name =
          Field<std::string>(entry, "name", where);
      if (!name.ok()) return name.status();
      absl::StatusOr<std::vector<std::string>> members =
          Field<std::vector<std::string>>(entry, "members", where);
      if (!members.ok()) return members.status();
      PopulationGroup g{*name, {}};
      for (const std::string& m : *members) {
        auto it = type_index.find(m);
        if (it == type_index.end()) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "group '%s': unknown member type '%s'", *name, m));
        }
        g.members.push_back(it->second);
      }
      groups.push_back(std::move(g));
    }
  }
  return PopulationModel::Create(*labels, std::move(types), std::move(groups));
}

absl::StatusOr<PopulationModel> LoadPopulationModel(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<PopulationModel> pop = ParsePopulationModel(*text);
  if (!pop.ok()) {
    return absl::Status(pop.status().code(), absl::StrFormat("%s: %s", path,
                                                             pop.status().message()));
  }
  return pop;
}

std::string FormatPopulationModel(const PopulationModel& pop) {
  json doc;
  doc["labels"] = pop.num_labels();
  doc["types"] = json::array();
  for (const PopulationType& t : pop.types()) {
    doc["types"].push_back({{"name", t.name},
                            {"weight", t.weight},
                            {"groundTruth", t.ground_truth},
                            {"predicted", t.predicted}});
  }
  doc["groups"] = json::array();
  for (const PopulationGroup& g : pop.groups()) {
    json members = json::array();
    for (int m : g.members) members.push_back(pop.type(m).name);
    doc["groups"].push_back({{"name", g.name}, {"members", members}});
  }
  return doc.dump(2) + "\n";
}

absl::StatusOr<std::vector<double>> ParseNumberList(std::string_view raw) {
  const absl::string_view text(raw.data(), raw.size());
  std::vector<double> out;
  int index = 0;
  for (absl::string_view f :
       absl::StrSplit(text, absl::ByAnyChar(", \t\n\r"), absl::SkipEmpty())) {
    ++index;
    const std::optional<double> v = ParseDouble(f);
    if (!v.has_value()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "entry %d: cannot parse '%s' as a number", index, f));
    }
    out.push_back(*v);
  }
  if (out.empty()) {
    return absl::InvalidArgumentError("empty number list");
  }
  return out;
}

}  // namespace uarank
