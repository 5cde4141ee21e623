// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_IO_HPP
#define FREEWALK_IO_HPP

#include <string>
#include <vector>

#include "freewalk/bounds.hpp"

namespace freewalk::io {

// 17 significant digits: decimal round-trips IEEE doubles exactly.
// inf / -inf / nan are spelled literally.
std::string format_double(double v);
double parse_double(const std::string& s);

// "A..B" -> [A, B]
std::pair<long, long> parse_k_range(const std::string& s);

// "pi", "pi/2", "pi/3", ... or a decimal radian value.
double parse_angle(const std::string& s);

// Lines "tau weight", whitespace separated, '#' comments.
std::vector<angle_atom> parse_mixture_file(const std::string& path);

bound_status parse_status(const std::string& s);

std::string profile_csv_header();
std::string profile_csv_row(const profile_row& row);
std::string profile_to_csv(const cutoff_profile& profile);
cutoff_profile parse_profile_csv(const std::string& text);

// Bitwise-aware equality (nan == nan) used by the round-trip tests.
bool same_double(double a, double b);
bool same_row(const profile_row& a, const profile_row& b);

}  // namespace freewalk::io

#endif  // FREEWALK_IO_HPP
