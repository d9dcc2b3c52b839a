#pragma once

// Two-by-two group data acting on the upper half-plane: generators, words in
// the generators, and the closed geodesic a word determines.
//
// Words are written with one character per letter: generator i is the i-th
// lowercase letter and its inverse the matching uppercase letter, so "aB"
// stands for a b^-1.

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypcollar/errors.hpp"
#include "hypcollar/quantity.hpp"
#include "hypcollar/upper_half_plane.hpp"

namespace hypcollar {

inline constexpr double kDeterminantTolerance = 1e-9;
inline constexpr int kMaxGenerators = 26;

class SurfaceGroupData {
 public:
  explicit SurfaceGroupData(std::vector<Mat2> generators, std::vector<std::string> labels = {})
      : generators_(std::move(generators)), labels_(std::move(labels)) {
    if (generators_.empty()) throw DomainError("group needs at least one generator");
    if (static_cast<int>(generators_.size()) > kMaxGenerators) {
      throw DomainError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const Mat2& m = generators_[i];
      if (!m.allFinite()) throw DomainError("generator " + std::to_string(i) + " has non-finite entries");
      const double det = m.determinant();
      if (std::abs(det - 1.0) > kDeterminantTolerance) {
        throw DomainError("generator " + std::to_string(i) + " has determinant " + std::to_string(det) +
                          ", expected 1");
      }
    }
    if (labels_.empty()) {
      for (std::size_t i = 0; i < generators_.size(); ++i) labels_.emplace_back(1, static_cast<char>('a' + i));
    }
    if (labels_.size() != generators_.size()) throw DomainError("one label per generator is required");
  }

  [[nodiscard]] int size() const { return static_cast<int>(generators_.size()); }
  [[nodiscard]] const std::vector<Mat2>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  /// Same group data with every generator replaced by h g h^-1.
  [[nodiscard]] SurfaceGroupData conjugate_by(const Mat2& h) const {
    std::vector<Mat2> gens;
    for (const auto& g : generators_) gens.push_back(h * g * sl2_inverse(h));
    return SurfaceGroupData(std::move(gens), labels_);
  }

 private:
  std::vector<Mat2> generators_;
  std::vector<std::string> labels_;
};

struct Letter {
  int generator;
  int exponent;  // +1 or -1

  [[nodiscard]] Letter inverse() const { return {generator, -exponent}; }
  [[nodiscard]] char symbol() const {
    const char c = static_cast<char>('a' + generator);
    return exponent > 0 ? c : static_cast<char>(std::toupper(c));
  }
  friend bool operator==(Letter, Letter) = default;
};

inline std::string letters_to_string(const std::vector<Letter>& letters) {
  std::string s;
  for (const auto& l : letters) s.push_back(l.symbol());
  return s;
}

inline Mat2 letter_matrix(const SurfaceGroupData& group, Letter l) {
  const Mat2& m = group.generators().at(l.generator);
  return l.exponent > 0 ? m : sl2_inverse(m);
}

/// Product of the letters' matrices, left to right.
inline Mat2 letters_matrix(const SurfaceGroupData& group, const std::vector<Letter>& letters) {
  Mat2 m = Mat2::Identity();
  for (const auto& l : letters) m = m * letter_matrix(group, l);
  return m;
}

/// Nonempty, freely and cyclically reduced word.
class Word {
 public:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("word must be nonempty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const Letter& l = letters_[i];
      if (l.generator < 0 || l.generator >= kMaxGenerators || (l.exponent != 1 && l.exponent != -1)) {
        throw DomainError("invalid letter in word");
      }
      const Letter& next = letters_[(i + 1) % letters_.size()];
      if (letters_.size() > 1 && next == l.inverse()) {
        throw DomainError("word " + letters_to_string(letters_) + " is not freely and cyclically reduced");
      }
    }
  }

  /// Parses letters a..z (generators) and A..Z (inverses); generators must
  /// exist in a group with `generator_count` generators.
  static Word parse(std::string_view text, int generator_count) {
    std::vector<Letter> letters;
    for (const char c : text) {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw DomainError(std::string("invalid character '") + c + "' in word");
      }
      const int g = std::tolower(static_cast<unsigned char>(c)) - 'a';
      if (g >= generator_count) {
        throw DomainError(std::string("letter '") + c + "' names a generator the group does not have");
      }
      letters.push_back({g, std::islower(static_cast<unsigned char>(c)) ? 1 : -1});
    }
    return Word(std::move(letters));
  }

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] int size() const { return static_cast<int>(letters_.size()); }
  [[nodiscard]] std::string to_string() const { return letters_to_string(letters_); }

  [[nodiscard]] Word inverse() const {
    std::vector<Letter> out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
  }

  [[nodiscard]] Word rotated(int k) const {
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + (k % size()), out.end());
    return Word(std::move(out));
  }

  /// Lexicographically least cyclic rotation (by the string form).
  [[nodiscard]] Word canonical() const {
    Word best = *this;
    for (int k = 1; k < size(); ++k) {
      Word r = rotated(k);
      if (r.to_string() < best.to_string()) best = std::move(r);
    }
    return best;
  }

  /// False when the word is a proper power u^k, k >= 2.
  [[nodiscard]] bool is_primitive() const {
    const int n = size();
    for (int p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (int i = p; i < n && periodic; ++i) periodic = letters_[i] == letters_[i - p];
      if (periodic) return false;
    }
    return true;
  }

 private:
  std::vector<Letter> letters_;
};

inline Mat2 word_matrix(const SurfaceGroupData& group, const Word& w) { return letters_matrix(group, w.letters()); }

/// Fixed points of a hyperbolic SL(2,R) matrix, repelling first.
inline GeodesicH2 hyperbolic_axis(const Mat2& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double tr = a + d;
  if (!(std::abs(tr) > 2.0)) throw GeometryError("matrix is not hyperbolic");
  if (c == 0.0) {
    // Fixed points inf and b / (d - a); inf attracts iff |a| > |d|.
    const BoundaryPoint finite = b / (d - a);
    return std::abs(a) > std::abs(d) ? GeodesicH2(finite, kBoundaryInfinity) : GeodesicH2(kBoundaryInfinity, finite);
  }
  // Roots of c x^2 + (d - a) x - b = 0, discriminant tr^2 - 4 det.
  const double disc = std::sqrt((tr - 2.0) * (tr + 2.0) + 4.0 * (1.0 - m.determinant()));
  const double beta = d - a;
  const double q = -0.5 * (beta + std::copysign(disc, beta));
  const double x1 = q / c, x2 = -b / q;
  // x attracts iff |c x + d| > 1 (derivative 1 / (c x + d)^2).
  return std::abs(c * x1 + d) > 1.0 ? GeodesicH2(x2, x1) : GeodesicH2(x1, x2);
}

struct ClosedGeodesicH2 {
  Word word;
  Mat2 matrix;
  Length length;
  /// Oriented from the repelling to the attracting fixed point.
  GeodesicH2 axis;
};

/// Closed geodesic of a word; its length is 2 arccosh(|tr| / 2).
inline ClosedGeodesicH2 geodesic_from_word(const SurfaceGroupData& group, const Word& word) {
  const Mat2 m = word_matrix(group, word);
  const double tr = std::abs(m.trace());
  if (!(tr > 2.0 + kDeterminantTolerance)) {
    throw GeometryError("word " + word.to_string() + " is not hyperbolic (|trace| = " + std::to_string(tr) + ")");
  }
  return {word, m, Length(2.0 * std::acosh(tr / 2.0)), hyperbolic_axis(m)};
}

}  // namespace hypcollar
