#include "fuzcon/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fuzcon/errors.hpp"

namespace fuzcon {

namespace {

double to_double(std::string_view key, std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw ConfigError("config: invalid number '" + s + "' for " + std::string(key));
  }
  return v;
}

int to_int(std::string_view key, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("config: invalid integer '" + std::string(text) + "' for " +
                      std::string(key));
  }
  return v;
}

}  // namespace

void NumericConfig::validate() const {
  if (grid_n < 3) throw ConfigError("config: grid_n must be >= 3");
  if (grid2_n < 3) throw ConfigError("config: grid2_n must be >= 3");
  if (ep_n < 2) throw ConfigError("config: ep_n must be >= 2");
  if (bisect_iters < 30) throw ConfigError("config: bisect_iters must be >= 30");
  if (!(eps_eq > 0)) throw ConfigError("config: eps_eq must be positive");
  if (eps_zero < 0 || eps_one < 0) {
    throw ConfigError("config: eps_zero/eps_one must be non-negative");
  }
  if (!(tau_jump > 0)) throw ConfigError("config: tau_jump must be positive");
  if (delta_jump.empty()) throw ConfigError("config: delta_jump must not be empty");
  for (std::size_t i = 0; i < delta_jump.size(); ++i) {
    if (!(delta_jump[i] > 0) || delta_jump[i] >= 0.5) {
      throw ConfigError("config: delta_jump entries must lie in (0, 0.5)");
    }
    if (i > 0 && !(delta_jump[i] < delta_jump[i - 1])) {
      throw ConfigError("config: delta_jump must be strictly decreasing");
    }
  }
}

void NumericConfig::set(std::string_view key, std::string_view value) {
  if (key == "grid_n") {
    grid_n = to_int(key, value);
  } else if (key == "grid2_n") {
    grid2_n = to_int(key, value);
  } else if (key == "ep_n") {
    ep_n = to_int(key, value);
  } else if (key == "bisect_iters") {
    bisect_iters = to_int(key, value);
  } else if (key == "eps_eq") {
    eps_eq = to_double(key, value);
  } else if (key == "eps_zero") {
    eps_zero = to_double(key, value);
  } else if (key == "eps_one") {
    eps_one = to_double(key, value);
  } else if (key == "tau_jump") {
    tau_jump = to_double(key, value);
  } else if (key == "delta_jump") {
    // colon-separated, e.g. delta_jump=1e-4:1e-5:1e-6
    delta_jump.clear();
    std::size_t start = 0;
    while (start <= value.size()) {
      auto end = value.find(':', start);
      if (end == std::string_view::npos) end = value.size();
      delta_jump.push_back(to_double(key, value.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
}

void NumericConfig::apply_overrides(std::string_view list) {
  std::string normalized(list);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("config: expected key=value, got '" + item + "'");
    }
    set(std::string_view(item).substr(0, eq), std::string_view(item).substr(eq + 1));
  }
  validate();
}

}  // namespace fuzcon
