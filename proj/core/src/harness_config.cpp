// SPDX-License-Identifier: Apache-2.0
//
// rismon - surveillance success probability for RIS-aided monitoring
// Copyright (C) 2025 The rismon authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rismon/error.hpp"
#include "rismon/harness.hpp"

namespace rismon {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError(std::string(key), "not a number: '" + std::string(text) + "'");
  return v;
}

std::uint64_t to_uint(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError(std::string(key), "not a non-negative integer: '" + std::string(text) + "'");
  return v;
}

std::vector<double> to_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(to_double(key, text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void apply_config_setting(SystemConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  const std::string k(key);
  if (key == "num_elements") {
    c.num_elements = to_uint(key, value);
  } else if (key == "num_jammers") {
    const auto n = to_uint(key, value);
    if (n > kMaxJammers)
      throw ConfigError(k, "must be <= 12 (subset enumeration bound), got " + std::to_string(n));
    c.num_jammers = n;
    if (c.var_nr.size() != n) c.var_nr.assign(n, c.var_nr.empty() ? 0.5 : c.var_nr[0]);
  } else if (key == "var_sd") {
    c.var_sd = to_double(key, value);
  } else if (key == "var_sr") {
    c.var_sr = to_double(key, value);
  } else if (key == "var_rm") {
    c.var_rm = to_double(key, value);
  } else if (key == "var_rd") {
    c.var_rd = to_double(key, value);
  } else if (key == "var_nr") {
    c.var_nr = to_list(key, value);
    // one value applies to every jammer
    if (c.var_nr.size() == 1) c.var_nr.assign(c.num_jammers, c.var_nr[0]);
  } else if (key == "gamma_s_db") {
    c.gamma_s_db = to_double(key, value);
  } else if (key == "gamma_j_db") {
    c.gamma_j_db = to_double(key, value);
  } else if (key == "r_th") {
    c.r_th = to_double(key, value);
  } else if (key == "quad_order") {
    c.quad_order = to_uint(key, value);
  } else if (key == "master_seed") {
    c.master_seed = to_uint(key, value);
  } else {
    throw ConfigError(k, "unknown key");
  }
}

void apply_config_settings(SystemConfig& c, const std::vector<ConfigSetting>& settings) {
  // num_jammers first so that a var_nr list is checked against the final N
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& s : settings) {
      if ((trim(s.key) == "num_jammers") != (pass == 0)) continue;
      try {
        apply_config_setting(c, s.key, s.value);
      } catch (const ConfigError& e) {
        if (s.line == 0) throw;
        std::string msg = e.what();
        if (!e.key().empty()) msg = msg.substr(e.key().size() + 2);
        throw ConfigError(e.key(), "line " + std::to_string(s.line) + ": " + msg);
      }
    }
  }
  c.validate();
}

SystemConfig parse_config_text(std::string_view text) {
  std::vector<ConfigSetting> settings;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected key=value");
    settings.push_back({std::string(trim(line.substr(0, eq))), std::string(line.substr(eq + 1)), line_no});
  }
  SystemConfig c;
  apply_config_settings(c, settings);
  return c;
}

SystemConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace rismon
