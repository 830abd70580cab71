#include "acedag/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "acedag/errors.hpp"

namespace acedag {

std::string_view group_name(Group g) {
  switch (g) {
    case Group::T:
      return "T";
    case Group::SO2:
      return "SO2";
    case Group::O3:
      return "O3";
    case Group::O3F:
      return "O3F";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  if (name == "T") return Group::T;
  if (name == "SO2") return Group::SO2;
  if (name == "O3") return Group::O3;
  if (name == "O3F") return Group::O3F;
  throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected T, SO2, O3 or O3F)");
}

int component_count(Group g) {
  switch (g) {
    case Group::T:
      return 1;
    case Group::SO2:
      return 2;
    case Group::O3:
      return 3;
    case Group::O3F:
      return 4;
  }
  return 0;
}

int element_degree(Group g, const OneParticleIndex& k) {
  switch (g) {
    case Group::T:
      return std::abs(k.m);
    case Group::SO2:
      return k.n + std::abs(k.m);
    case Group::O3:
      return k.n + k.l;
    case Group::O3F:
      return k.n + k.l + k.f;
  }
  return 0;
}

bool is_valid_index(Group g, const OneParticleIndex& k) {
  switch (g) {
    case Group::T:
      return k.n == 0 && k.l == 0 && k.f == 0;
    case Group::SO2:
      return k.n >= 0 && k.l == 0 && k.f == 0;
    case Group::O3:
      return k.n >= 0 && k.l >= 0 && std::abs(k.m) <= k.l && k.f == 0;
    case Group::O3F:
      return k.n >= 0 && k.l >= 0 && std::abs(k.m) <= k.l && k.f >= 0;
  }
  return false;
}

BasisTuple::BasisTuple(std::vector<OneParticleIndex> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

BasisTuple::BasisTuple(std::initializer_list<OneParticleIndex> elements)
    : BasisTuple(std::vector<OneParticleIndex>(elements)) {}

BasisTuple BasisTuple::from_sorted(std::vector<OneParticleIndex> elements) {
  BasisTuple t;
  t.elements_ = std::move(elements);
  return t;
}

BasisTuple BasisTuple::merged(const BasisTuple& other) const {
  std::vector<OneParticleIndex> out;
  out.reserve(order() + other.order());
  std::merge(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
             std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::strong_ordering operator<=>(const BasisTuple& a, const BasisTuple& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                b.elements_.begin(), b.elements_.end());
}

BasisTuple torus_tuple(std::initializer_list<int> ms) {
  std::vector<OneParticleIndex> v;
  v.reserve(ms.size());
  for (int m : ms) v.push_back(torus_index(m));
  return BasisTuple(std::move(v));
}

std::size_t BasisTupleHash::operator()(const BasisTuple& t) const noexcept {
  // FNV-1a over the packed components
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
  };
  for (const auto& k : t) {
    mix(k.n);
    mix(k.l);
    mix(k.m);
    mix(k.f);
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string_view norm_name(Norm p) {
  switch (p) {
    case Norm::One:
      return "1";
    case Norm::Two:
      return "2";
    case Norm::Inf:
      return "inf";
  }
  return "?";
}

Norm parse_norm(std::string_view name) {
  if (name == "1") return Norm::One;
  if (name == "2") return Norm::Two;
  if (name == "inf") return Norm::Inf;
  throw std::invalid_argument("unknown degree norm '" + std::string(name) + "' (expected 1, 2 or inf)");
}

std::int64_t degree_key(const BasisTuple& t, Group g, Norm p) {
  std::int64_t acc = 0;
  for (const auto& k : t) {
    const std::int64_t d = element_degree(g, k);
    switch (p) {
      case Norm::One:
        acc += d;
        break;
      case Norm::Two:
        acc += d * d;
        break;
      case Norm::Inf:
        acc = std::max(acc, d);
        break;
    }
  }
  return acc;
}

std::int64_t degree_bound_key(const DegreeSpec& spec) {
  const std::int64_t D = spec.D;
  return spec.p == Norm::Two ? D * D : D;
}

double degree(const BasisTuple& t, Group g, Norm p) {
  const auto key = static_cast<double>(degree_key(t, g, p));
  return p == Norm::Two ? std::sqrt(key) : key;
}

bool within_degree(const BasisTuple& t, Group g, const DegreeSpec& spec) {
  return degree_key(t, g, spec.p) <= degree_bound_key(spec);
}

bool satisfies_constraints(const BasisTuple& t, Group g) {
  long msum = 0;
  long lsum = 0;
  for (const auto& k : t) {
    msum += k.m;
    lsum += k.l;
  }
  if (msum != 0) return false;
  if ((g == Group::O3 || g == Group::O3F) && (lsum % 2) != 0) return false;
  return true;
}

namespace {

void append_components(std::string& out, const OneParticleIndex& k, Group g) {
  auto put = [&out](int v) {
    if (!out.empty() && out.back() != '(') out += ',';
    out += std::to_string(v);
  };
  switch (g) {
    case Group::T:
      put(k.m);
      break;
    case Group::SO2:
      put(k.n);
      put(k.m);
      break;
    case Group::O3:
      put(k.n);
      put(k.l);
      put(k.m);
      break;
    case Group::O3F:
      put(k.n);
      put(k.l);
      put(k.m);
      put(k.f);
      break;
  }
}

}  // namespace

std::string format_tuple(const BasisTuple& t, Group g) {
  std::string out;
  for (const auto& k : t) append_components(out, k, g);
  return out;
}

std::string format_index(const OneParticleIndex& k, Group g) {
  std::string out = "(";
  append_components(out, k, g);
  out += ')';
  return out;
}

BasisTuple parse_tuple(std::string_view text, Group g) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto field = text.substr(pos, end - pos);
    int v = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last) {
      throw FormatError("bad tuple component '" + std::string(field) + "'", pos);
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const auto stride = static_cast<std::size_t>(component_count(g));
  if (values.size() % stride != 0) {
    throw FormatError("tuple component count " + std::to_string(values.size()) + " is not a multiple of " +
                          std::to_string(stride) + " for group " + std::string(group_name(g)),
                      0);
  }
  std::vector<OneParticleIndex> elems;
  elems.reserve(values.size() / stride);
  for (std::size_t i = 0; i < values.size(); i += stride) {
    OneParticleIndex k;
    switch (g) {
      case Group::T:
        k = torus_index(values[i]);
        break;
      case Group::SO2:
        k = so2_index(values[i], values[i + 1]);
        break;
      case Group::O3:
        k = o3_index(values[i], values[i + 1], values[i + 2]);
        break;
      case Group::O3F:
        k = o3f_index(values[i], values[i + 1], values[i + 2], values[i + 3]);
        break;
    }
    if (!is_valid_index(g, k)) {
      throw FormatError("invalid one-particle index " + format_index(k, g) + " for group " +
                            std::string(group_name(g)),
                        0);
    }
    elems.push_back(k);
  }
  return BasisTuple(std::move(elems));
}

}  // namespace acedag
