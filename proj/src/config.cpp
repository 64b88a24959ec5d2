#include "apnlab/config.hpp"

#include <fstream>
#include <sstream>

namespace apnlab {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "max_n") max_n = std::stoi(value);
  else if (key == "max_root_field") max_root_field = std::stoi(value);
  else if (key == "max_trial_deg") max_trial_deg = std::stoi(value);
  else if (key == "max_poly_degree") max_poly_degree = std::stoi(value);
  else if (key == "bezout_scan_degree") bezout_scan_degree = std::stoi(value);
  else if (key == "workers") workers = static_cast<unsigned>(std::stoul(value));
  else if (key == "seed") seed = std::stoull(value);
  else if (key == "format") format = value;
  else if (key == "out") out_path = value;
  else if (key == "fixture_dir") fixture_dir = value;
  else throw std::invalid_argument("unknown config key: " + key);
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is not key=value: " + line);
    set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

std::map<std::string, std::string> RunConfig::items() const {
  return {
      {"max_n", std::to_string(max_n)},
      {"max_root_field", std::to_string(max_root_field)},
      {"max_trial_deg", std::to_string(max_trial_deg)},
      {"max_poly_degree", std::to_string(max_poly_degree)},
      {"bezout_scan_degree", std::to_string(bezout_scan_degree)},
      {"workers", std::to_string(workers)},
      {"seed", std::to_string(seed)},
  };
}

std::string RunConfig::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items()) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace apnlab
