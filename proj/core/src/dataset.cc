// Copyright 2026 The mirbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mirbench/dataset.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mirbench {

std::vector<std::size_t> DecayDataset::lengths() const {
  std::set<std::size_t> ls;
  for (const DatasetEntry& e : entries) ls.insert(e.length);
  return {ls.begin(), ls.end()};
}

std::vector<DatasetEntry> DecayDataset::at_length(std::size_t length) const {
  std::vector<DatasetEntry> out;
  for (const DatasetEntry& e : entries) {
    if (e.length == length) out.push_back(e);
  }
  return out;
}

std::vector<double> DecayDataset::mean_survival() const {
  std::vector<double> out;
  for (std::size_t length : lengths()) {
    double acc = 0.0;
    std::size_t count = 0;
    for (const DatasetEntry& e : entries) {
      if (e.length != length) continue;
      acc += e.rate();
      ++count;
    }
    out.push_back(acc / static_cast<double>(count));
  }
  return out;
}

void validate(const DecayDataset& data) {
  if (data.n_qubits == 0 || data.n_qubits > 64) throw std::invalid_argument("dataset: bad qubit count");
  for (const DatasetEntry& e : data.entries) {
    if (e.shots == 0) throw std::invalid_argument("dataset: entry with zero shots");
    if (e.successes > e.shots) throw std::invalid_argument("dataset: successes exceed shots");
  }
}

std::string dataset_to_csv(const DecayDataset& data) {
  std::ostringstream out;
  out << "n,L,circuit_id,shots,successes,seed\n";
  for (const DatasetEntry& e : data.entries) {
    out << data.n_qubits << ',' << e.length << ',' << e.circuit_id << ',' << e.shots << ','
        << e.successes << ',' << e.seed << '\n';
  }
  return out.str();
}

DecayDataset dataset_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,L,circuit_id,shots,successes,seed", 0) != 0) {
    throw std::invalid_argument("dataset CSV: missing header n,L,circuit_id,shots,successes,seed");
  }
  DecayDataset data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::uint64_t> values;
    while (std::getline(row, field, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoull(field, &used));
        if (used != field.size() && field.substr(used) != "\r") throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("dataset CSV: bad field on line " + std::to_string(line_no));
      }
    }
    if (values.size() != 6) throw std::invalid_argument("dataset CSV: expected 6 fields on line " + std::to_string(line_no));
    if (data.n_qubits == 0) data.n_qubits = values[0];
    if (values[0] != data.n_qubits) throw std::invalid_argument("dataset CSV: mixed qubit counts");
    data.entries.push_back({values[1], values[2], values[3], values[4], values[5]});
  }
  validate(data);
  return data;
}

std::string dataset_to_json(const DecayDataset& data) {
  nlohmann::json j;
  j["n"] = data.n_qubits;
  nlohmann::json entries = nlohmann::json::array();
  for (const DatasetEntry& e : data.entries) {
    entries.push_back({{"L", e.length},
                       {"circuit_id", e.circuit_id},
                       {"shots", e.shots},
                       {"successes", e.successes},
                       {"seed", e.seed}});
  }
  j["entries"] = entries;
  return j.dump(1);
}

DecayDataset dataset_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    DecayDataset data;
    data.n_qubits = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
      data.entries.push_back({e.at("L").get<std::size_t>(), e.at("circuit_id").get<std::size_t>(),
                              e.at("shots").get<std::uint64_t>(), e.at("successes").get<std::uint64_t>(),
                              e.at("seed").get<std::uint64_t>()});
    }
    validate(data);
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("dataset JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

DecayDataset read_dataset(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".json") return dataset_from_json(text);
  return dataset_from_csv(text);
}

}  // namespace mirbench
