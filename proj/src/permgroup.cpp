#include "simplexharm/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "simplexharm/errors.hpp"

namespace simplexharm::perm {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  const bool has_separator =
      text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos;
  if (has_separator) {
    int current = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        current = (current < 0 ? 0 : current * 10) + (c - '0');
      } else if (c == ',' || c == ' ') {
        if (current >= 0) values.push_back(current);
        current = -1;
      } else {
        throw ArgumentError("unexpected character in integer list: '" + std::string(text) + "'");
      }
    }
    if (current >= 0) values.push_back(current);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ArgumentError("unexpected character in integer list: '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  return values;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Beta-set (first-column hook lengths) of a partition padded to `length` rows.
std::vector<int> beta_set(const std::vector<int>& parts, int length) {
  std::vector<int> beta(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int part = i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
    beta[static_cast<size_t>(i)] = part + (length - 1 - i);
  }
  return beta;
}

long long murnaghan_nakayama(std::vector<int> beta, std::span<const int> cycles) {
  if (cycles.empty()) return 1;
  const int r = cycles.front();
  const auto rest = cycles.subspan(1);
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Leg length of the removed rim hook = beta numbers jumped over.
    const auto jumped = std::count_if(beta.begin(), beta.end(),
                                      [&](int b) { return b > target && b < beta[i]; });
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    const long long sub = murnaghan_nakayama(std::move(next), rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ArgumentError("partition must have at least one part");
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto body = strip(text);
  if (!body.empty() && body.front() == '[') body.remove_prefix(1);
  if (!body.empty() && body.back() == ']') body.remove_suffix(1);
  body = strip(body);
  if (body.empty()) throw ArgumentError("empty partition label");
  return Partition(parse_int_list(body));
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++cols[static_cast<size_t>(c)];
  return Partition(std::move(cols));
}

std::string Partition::label() const {
  const bool compact = parts_.front() < 10;
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw ArgumentError("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  if (n < 1) throw ArgumentError("permutation degree must be >= 1");
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int& x : images) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x - 1)])
      throw ArgumentError("image list is not a permutation of 1..n");
    seen[static_cast<size_t>(x - 1)] = true;
    --x;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int x : points) {
    if (x < 1 || x > n) throw ArgumentError("cycle point out of range");
    if (used[static_cast<size_t>(x - 1)]) throw ArgumentError("cycle repeats a point");
    used[static_cast<size_t>(x - 1)] = true;
  }
  for (size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    p.images_[static_cast<size_t>(from - 1)] = to - 1;
  }
  return p;
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw ArgumentError("adjacent transposition index out of range");
  return cycle(n, {i, i + 1});
}

Permutation Permutation::parse(int n, std::string_view text) {
  auto body = strip(text);
  Permutation result = identity(n);
  if (body == "e" || body.empty()) return result;
  size_t pos = 0;
  while (pos < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
      continue;
    }
    if (body[pos] != '(') throw ArgumentError("expected '(' in permutation: " + std::string(text));
    const size_t close = body.find(')', pos);
    if (close == std::string_view::npos)
      throw ArgumentError("unbalanced parentheses in permutation: " + std::string(text));
    const auto inner = body.substr(pos + 1, close - pos - 1);
    if (inner.find(",,") != std::string_view::npos || inner.empty())
      throw ArgumentError("empty entry in cycle: " + std::string(text));
    std::vector<int> points;
    if (inner.find(',') == std::string_view::npos && inner.size() > 1 && n >= 10)
      throw ArgumentError("compact cycle notation is ambiguous for n >= 10");
    points = parse_int_list(inner);
    result = result * cycle(n, points);
    pos = close + 1;
  }
  return result;
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation p = identity(n);
  for (int i : word) p = p * adjacent(n, i);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& x : out) ++x;
  return out;
}

Permutation Permutation::operator*(const Permutation& then) const {
  if (degree() != then.degree()) throw ArgumentError("permutation degrees differ");
  std::vector<int> out(images_.size());
  for (size_t x = 0; x < images_.size(); ++x)
    out[x] = then.images_[static_cast<size_t>(images_[x])];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) out[static_cast<size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(int exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  Permutation out = identity(degree());
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

int Permutation::sign() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> c;
    size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      c.push_back(static_cast<int>(x) + 1);
      x = static_cast<size_t>(images_[x]);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<int> Permutation::adjacent_word() const {
  // Swapping one-line positions i, i+1 of c yields s_i * c; sorting to the
  // identity therefore records a word whose left-to-right product is *this.
  std::vector<int> line = images_;
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
    }
  }
  return word;
}

// ---------------------------------------------------------------------------
// Classes and characters

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw ArgumentError("factorial argument out of 64-bit range");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t class_size(const Partition& lengths) {
  std::map<int, int> mult;
  for (int len : lengths.parts()) ++mult[len];
  std::int64_t denom = 1;
  for (auto [len, a] : mult) {
    for (int k = 0; k < a; ++k) denom *= len;
    denom *= factorial(a);
  }
  return factorial(lengths.size()) / denom;
}

CycleType make_cycle_type(const Partition& lengths) { return CycleType{lengths, class_size(lengths)}; }

CycleType cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  int covered = 0;
  for (const auto& c : p.cycles()) {
    lengths.push_back(static_cast<int>(c.size()));
    covered += static_cast<int>(c.size());
  }
  for (int k = covered; k < p.degree(); ++k) lengths.push_back(1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return make_cycle_type(Partition(std::move(lengths)));
}

std::string CycleType::label() const {
  std::string out;
  const auto& parts = lengths.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += "(" + std::to_string(parts[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

CycleType parse_cycle_type(std::string_view text) {
  auto body = strip(text);
  std::vector<int> lengths;
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw ArgumentError("malformed cycle type: " + std::string(text));
    const size_t close = body.find(')', pos);
    if (close == std::string_view::npos) throw ArgumentError("malformed cycle type: " + std::string(text));
    const auto inner = body.substr(pos + 1, close - pos - 1);
    if (inner.empty()) throw ArgumentError("malformed cycle type: " + std::string(text));
    int len = 0;
    for (char c : inner) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ArgumentError("malformed cycle type: " + std::string(text));
      len = len * 10 + (c - '0');
    }
    pos = close + 1;
    int count = 1;
    if (pos < body.size() && body[pos] == '^') {
      ++pos;
      count = 0;
      while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
        count = count * 10 + (body[pos++] - '0');
      if (count == 0) throw ArgumentError("malformed cycle type exponent: " + std::string(text));
    }
    for (int k = 0; k < count; ++k) lengths.push_back(len);
  }
  if (lengths.empty()) throw ArgumentError("empty cycle type");
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return make_cycle_type(Partition(std::move(lengths)));
}

long long character(const Partition& f, const Partition& cycle_lengths) {
  if (f.size() != cycle_lengths.size())
    throw ArgumentError("character: partition " + f.label() + " and class " +
                        cycle_lengths.label() + " have different n");
  return murnaghan_nakayama(beta_set(f.parts(), f.length()), cycle_lengths.parts());
}

long long CharacterTable::at(const Partition& f, const Partition& k) const {
  return values.at(static_cast<size_t>(irrep_index(f))).at(static_cast<size_t>(class_index(k)));
}

int CharacterTable::irrep_index(const Partition& f) const {
  for (size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i] == f) return static_cast<int>(i);
  throw ArgumentError("partition " + f.label() + " not in character table of S(" + std::to_string(n) + ")");
}

int CharacterTable::class_index(const Partition& k) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].lengths == k) return static_cast<int>(i);
  throw ArgumentError("class " + k.label() + " not in character table of S(" + std::to_string(n) + ")");
}

CharacterTable character_table(int n) {
  if (n < 2 || n > 8) throw ArgumentError("character_table: n must be in [2, 8]");
  CharacterTable table;
  table.n = n;
  table.order = factorial(n);
  table.irreps = partitions(n);
  for (const auto& k : partitions(n)) table.classes.push_back(make_cycle_type(k));
  for (const auto& f : table.irreps) {
    std::vector<long long> row;
    row.reserve(table.classes.size());
    for (const auto& k : table.classes) row.push_back(character(f, k));
    table.values.push_back(std::move(row));
  }
  return table;
}

std::vector<Permutation> cyclic_elements(int n) {
  if (n < 2) throw ArgumentError("cyclic_elements: n must be >= 2");
  std::vector<int> points(static_cast<size_t>(n));
  std::iota(points.begin(), points.end(), 1);
  const Permutation g = Permutation::cycle(n, points);
  std::vector<Permutation> out;
  Permutation power = g;
  for (int k = 1; k <= n; ++k) {
    out.push_back(power);
    power = power * g;
  }
  return out;
}

int trivial_multiplicity(const Partition& f) {
  const int n = f.size();
  if (n == 1) return 1;
  long long sum = 0;
  for (const auto& h : cyclic_elements(n)) sum += character(f, cycle_type(h));
  if (sum % n != 0)
    throw ConsistencyError("trivial multiplicity of " + f.label() + " is not an integer");
  return static_cast<int>(sum / n);
}

std::complex<double> cyclic_character(int n, int alpha, int power) {
  if (n < 1 || alpha < 0 || alpha >= n) throw ArgumentError("cyclic_character: need 0 <= alpha < n");
  const long long reduced = ((static_cast<long long>(alpha) * power) % n + n) % n;
  if (reduced == 0) return {1.0, 0.0};
  if (2 * reduced == n) return {-1.0, 0.0};
  if (4 * reduced == n) return {0.0, 1.0};
  if (4 * reduced == 3LL * n) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(reduced) / n);
}

}  // namespace simplexharm::perm
