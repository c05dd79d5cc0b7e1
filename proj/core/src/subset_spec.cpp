#include "hcube/subset_spec.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hcube/cube_function.hpp"

namespace hcube {

SubsetSpec explicit_subset(std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SubsetSpec s;
  s.kind = SubsetSpec::Kind::explicit_list;
  s.masks = std::move(masks);
  return s;
}

SubsetSpec ball_subset(int radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  SubsetSpec s;
  s.kind = SubsetSpec::Kind::ball;
  s.radius = radius;
  return s;
}

SubsetSpec linear_subset(const Gf2Matrix& basis) {
  SubsetSpec s;
  s.kind = SubsetSpec::Kind::linear;
  s.basis = rref(basis).mat;  // canonical reduced basis, rank rows
  return s;
}

std::size_t subset_size(const SubsetSpec& s, int n) {
  const std::size_t full = domain_size(n);
  switch (s.kind) {
    case SubsetSpec::Kind::explicit_list:
      return s.masks.size();
    case SubsetSpec::Kind::ball: {
      if (s.radius > n) throw std::invalid_argument("ball radius exceeds n");
      std::size_t total = 0;
      double binom = 1.0;
      for (int j = 0; j <= s.radius; ++j) {
        total += static_cast<std::size_t>(binom + 0.5);
        binom = binom * (n - j) / (j + 1);
      }
      return std::min(total, full);
    }
    case SubsetSpec::Kind::linear:
      return std::size_t{1} << s.basis.rows();
  }
  return 0;
}

std::vector<std::uint32_t> materialize(const SubsetSpec& s, int n) {
  const std::size_t full = domain_size(n);
  std::vector<std::uint32_t> out;
  switch (s.kind) {
    case SubsetSpec::Kind::explicit_list:
      for (std::uint32_t m : s.masks)
        if (m >= full) throw std::invalid_argument("explicit mask out of range for n");
      return s.masks;
    case SubsetSpec::Kind::ball: {
      if (s.radius > n) throw std::invalid_argument("ball radius exceeds n");
      out.reserve(subset_size(s, n));
      for (std::size_t x = 0; x < full; ++x)
        if (std::popcount(x) <= s.radius) out.push_back(static_cast<std::uint32_t>(x));
      return out;
    }
    case SubsetSpec::Kind::linear: {
      if (s.basis.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("linear basis width != n");
      const std::size_t k = s.basis.rows();
      if (k > 24) throw std::invalid_argument("linear span too large to materialize");
      out.reserve(std::size_t{1} << k);
      for (std::size_t msg = 0; msg < (std::size_t{1} << k); ++msg) {
        std::uint64_t v = 0;
        std::uint64_t bits = msg;
        while (bits) {
          const int r = std::countr_zero(bits);
          bits &= bits - 1;
          v ^= s.basis.row_mask(static_cast<std::size_t>(r));
        }
        out.push_back(static_cast<std::uint32_t>(v));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

SubsetSpec parse_subset_spec(const std::string& text) {
  const std::string body = trim(text);
  const auto colon = body.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("subset spec must start with explicit:/ball:/linear:");
  const std::string head = trim(body.substr(0, colon));
  std::string rest = body.substr(colon + 1);
  // Rows/items may be separated by newlines, ';' or ','.
  for (char& c : rest)
    if (c == ';' || c == ',') c = '\n';

  if (head == "explicit") {
    std::vector<std::uint32_t> masks;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok)) {
      tok = trim(tok);
      if (tok.empty()) continue;
      masks.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    if (masks.empty()) throw std::invalid_argument("explicit subset spec is empty");
    return explicit_subset(std::move(masks));
  }
  if (head == "ball") {
    return ball_subset(std::stoi(trim(rest)));
  }
  if (head == "linear") {
    std::vector<std::string> rows;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok)) {
      tok = trim(tok);
      if (!tok.empty()) rows.push_back(tok);
    }
    if (rows.empty()) throw std::invalid_argument("linear subset spec has no rows");
    const std::size_t n = rows.front().size();
    Gf2Matrix basis(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != n) throw std::invalid_argument("ragged 0/1 rows");
      for (std::size_t c = 0; c < n; ++c) {
        if (rows[r][c] == '1')
          basis.set(r, c, true);
        else if (rows[r][c] != '0')
          throw std::invalid_argument("0/1 rows may contain only 0 and 1");
      }
    }
    return linear_subset(basis);
  }
  throw std::invalid_argument("unknown subset spec kind: " + head);
}

std::string format_subset_spec(const SubsetSpec& s) {
  std::ostringstream out;
  switch (s.kind) {
    case SubsetSpec::Kind::explicit_list: {
      out << "explicit: ";
      for (std::size_t i = 0; i < s.masks.size(); ++i) {
        if (i) out << ",";
        out << s.masks[i];
      }
      break;
    }
    case SubsetSpec::Kind::ball:
      out << "ball: " << s.radius;
      break;
    case SubsetSpec::Kind::linear: {
      out << "linear:";
      for (std::size_t r = 0; r < s.basis.rows(); ++r) {
        out << "\n";
        for (std::size_t c = 0; c < s.basis.cols(); ++c) out << (s.basis.get(r, c) ? '1' : '0');
      }
      break;
    }
  }
  return out.str();
}

}  // namespace hcube
