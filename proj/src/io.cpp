// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace freewalk::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

std::pair<long, long> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long k = std::stol(s);
    return {k, k};
  }
  const long a = std::stol(s.substr(0, dots));
  const long b = std::stol(s.substr(dots + 2));
  if (a < 1 || b < a) throw std::invalid_argument("empty k range: " + s);
  return {a, b};
}

double parse_angle(const std::string& s) {
  if (s == "pi") return std::numbers::pi;
  if (s.rfind("pi/", 0) == 0) {
    const double d = parse_double(s.substr(3));
    if (d == 0.0) throw std::invalid_argument("bad angle: " + s);
    return std::numbers::pi / d;
  }
  return parse_double(s);
}

std::vector<angle_atom> parse_mixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open mixture file: " + path);
  std::vector<angle_atom> atoms;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double tau, weight;
    if (ls >> tau >> weight) atoms.push_back({tau, weight});
  }
  if (atoms.empty())
    throw std::invalid_argument("mixture file has no atoms: " + path);
  return atoms;
}

bound_status parse_status(const std::string& s) {
  if (s == "valid") return bound_status::valid;
  if (s == "vacuous") return bound_status::vacuous;
  if (s == "divergent") return bound_status::divergent;
  throw std::invalid_argument("bad status: " + s);
}

std::string profile_csv_header() {
  return "k,past_k0,dsh,dsh_status,closed,closed_status,char_lower,"
         "char_status,window_lower,window_status,exact_tv,exact_err,"
         "exact_status,l2_norm";
}

std::string profile_csv_row(const profile_row& r) {
  std::string out = std::to_string(r.k);
  out += ',';
  out += r.past_k0 ? "1" : "0";
  auto bv = [&out](const bound_value& b) {
    out += ',';
    out += format_double(b.value);
    out += ',';
    out += to_string(b.status);
  };
  bv(r.dsh);
  bv(r.closed_upper);
  bv(r.char_low);
  bv(r.window_low);
  out += ',';
  out += format_double(r.exact ? *r.exact : std::numeric_limits<double>::quiet_NaN());
  out += ',';
  out += format_double(r.exact_err);
  out += ',';
  out += to_string(r.exact_status);
  out += ',';
  out += format_double(r.l2_norm);
  return out;
}

std::string profile_to_csv(const cutoff_profile& profile) {
  std::string out = profile_csv_header();
  out += '\n';
  for (const profile_row& r : profile.rows) {
    out += profile_csv_row(r);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

cutoff_profile parse_profile_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != profile_csv_header())
    throw std::invalid_argument("profile csv: bad header");
  cutoff_profile profile;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 14) throw std::invalid_argument("profile csv: bad row");
    profile_row r;
    r.k = std::stol(f[0]);
    r.past_k0 = f[1] == "1";
    r.dsh = {parse_double(f[2]), parse_status(f[3]), ""};
    r.closed_upper = {parse_double(f[4]), parse_status(f[5]), ""};
    r.char_low = {parse_double(f[6]), parse_status(f[7]), ""};
    r.window_low = {parse_double(f[8]), parse_status(f[9]), ""};
    const double exact = parse_double(f[10]);
    if (!std::isnan(exact)) r.exact = exact;
    r.exact_err = parse_double(f[11]);
    r.exact_status = parse_status(f[12]);
    r.l2_norm = parse_double(f[13]);
    profile.rows.push_back(std::move(r));
  }
  return profile;
}

bool same_double(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

bool same_row(const profile_row& a, const profile_row& b) {
  auto same_bv = [](const bound_value& x, const bound_value& y) {
    return same_double(x.value, y.value) && x.status == y.status;
  };
  return a.k == b.k && a.past_k0 == b.past_k0 && same_bv(a.dsh, b.dsh) &&
         same_bv(a.closed_upper, b.closed_upper) &&
         same_bv(a.char_low, b.char_low) &&
         same_bv(a.window_low, b.window_low) &&
         a.exact.has_value() == b.exact.has_value() &&
         (!a.exact || same_double(*a.exact, *b.exact)) &&
         same_double(a.exact_err, b.exact_err) &&
         a.exact_status == b.exact_status && same_double(a.l2_norm, b.l2_norm);
}

}  // namespace freewalk::io
