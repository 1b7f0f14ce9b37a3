// Copyright 2026 The vqse-prescreen Authors
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

#include "vqse/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vqse {
namespace {

constexpr std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

void check_qubit_count(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("qubit count must lie in [1, 64], got " +
                                std::to_string(n));
  }
}

// i^k for k mod 4.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char to_char(PauliLetter letter) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(letter)];
}

PauliWord PauliWord::single(int qubit, PauliLetter letter) {
  if (qubit < 0 || qubit >= 64) {
    throw std::out_of_range("qubit index out of range: " +
                            std::to_string(qubit));
  }
  const std::uint64_t b = bit(qubit);
  switch (letter) {
    case PauliLetter::I: return {};
    case PauliLetter::X: return {b, 0};
    case PauliLetter::Y: return {b, b};
    case PauliLetter::Z: return {0, b};
  }
  return {};
}

PauliLetter PauliWord::letter(int qubit) const {
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x) return z ? PauliLetter::Y : PauliLetter::X;
  return z ? PauliLetter::Z : PauliLetter::I;
}

int PauliWord::weight() const { return std::popcount(x_ | z_); }
int PauliWord::y_count() const { return std::popcount(x_ & z_); }
int PauliWord::span() const { return 64 - std::countl_zero(x_ | z_); }

bool PauliWord::commutes_with(PauliWord other) const {
  const int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return anti % 2 == 0;
}

std::string PauliWord::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < span(); ++q) {
    const PauliLetter l = letter(q);
    if (l == PauliLetter::I) continue;
    if (!out.empty()) out += ' ';
    out += to_char(l);
    out += std::to_string(q);
  }
  return out;
}

bool canonical_less(PauliWord a, PauliWord b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  // Same weight: walk both token lists in qubit order.
  std::uint64_t sa = a.x_mask() | a.z_mask();
  std::uint64_t sb = b.x_mask() | b.z_mask();
  while (sa != 0 && sb != 0) {
    const int qa = std::countr_zero(sa);
    const int qb = std::countr_zero(sb);
    if (qa != qb) return qa < qb;
    const auto la = a.letter(qa);
    const auto lb = b.letter(qb);
    if (la != lb) return la < lb;
    sa &= sa - 1;
    sb &= sb - 1;
  }
  return false;
}

PauliTerm::PauliTerm(int n, PauliWord w, Complex c)
    : n_qubits(n), word(w), coefficient(c) {
  check_qubit_count(n);
  if (w.span() > n) {
    throw std::invalid_argument("Pauli word " + w.to_string() +
                                " exceeds register of " + std::to_string(n) +
                                " qubits");
  }
}

PauliTerm PauliTerm::from_string(int n_qubits, std::string_view text,
                                 Complex coefficient) {
  std::istringstream in{std::string(text)};
  std::string token;
  PauliWord word;
  bool identity_token = false;
  int tokens = 0;
  while (in >> token) {
    ++tokens;
    if (token == "I") {
      identity_token = true;
      continue;
    }
    PauliLetter letter;
    switch (token[0]) {
      case 'X': letter = PauliLetter::X; break;
      case 'Y': letter = PauliLetter::Y; break;
      case 'Z': letter = PauliLetter::Z; break;
      default:
        throw std::invalid_argument("invalid Pauli token '" + token + "'");
    }
    int qubit = -1;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, qubit);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw std::invalid_argument("invalid Pauli token '" + token + "'");
    }
    if (qubit < 0 || qubit >= n_qubits) {
      throw std::out_of_range("qubit index " + std::to_string(qubit) +
                              " outside register of " +
                              std::to_string(n_qubits) + " qubits");
    }
    const PauliWord single = PauliWord::single(qubit, letter);
    if (((word.x_mask() | word.z_mask()) & (single.x_mask() | single.z_mask())) != 0) {
      throw std::invalid_argument("qubit " + std::to_string(qubit) +
                                  " repeated in Pauli word");
    }
    word = PauliWord(word.x_mask() | single.x_mask(),
                     word.z_mask() | single.z_mask());
  }
  if (tokens == 0) throw std::invalid_argument("empty Pauli word");
  if (identity_token && tokens != 1) {
    throw std::invalid_argument("identity token 'I' must stand alone");
  }
  return PauliTerm(n_qubits, word, coefficient);
}

PauliTerm PauliTerm::identity(int n_qubits, Complex coefficient) {
  return PauliTerm(n_qubits, PauliWord{}, coefficient);
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("qubit-count mismatch in Pauli product: " +
                                std::to_string(a.n_qubits) + " vs " +
                                std::to_string(b.n_qubits));
  }
  // P = i^{ny} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1 & x2|}.
  const PauliWord wa = a.word;
  const PauliWord wb = b.word;
  const PauliWord wc(wa.x_mask() ^ wb.x_mask(), wa.z_mask() ^ wb.z_mask());
  int phase = wa.y_count() + wb.y_count() - wc.y_count();
  phase += 2 * std::popcount(wa.z_mask() & wb.x_mask());
  return PauliTerm(a.n_qubits, wc, a.coefficient * b.coefficient * i_power(phase));
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("failed to format number");
  return std::string(buf, ptr);
}

std::string render_term(const PauliTerm& term) {
  if (term.coefficient.imag() != 0.0) {
    throw std::invalid_argument("cannot render complex coefficient for " +
                                term.word.to_string());
  }
  return format_real(term.coefficient.real()) + " " + term.word.to_string();
}

std::vector<PauliTerm> canonicalize(int n_qubits, std::vector<PauliTerm> terms) {
  check_qubit_count(n_qubits);
  for (const auto& t : terms) {
    if (t.n_qubits != n_qubits) {
      throw std::invalid_argument("term on " + std::to_string(t.n_qubits) +
                                  " qubits in a sum over " +
                                  std::to_string(n_qubits));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PauliTerm& a, const PauliTerm& b) {
                     return canonical_less(a.word, b.word);
                   });
  std::vector<PauliTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const PauliTerm& t) {
    return std::abs(t.coefficient) < kPruneTolerance;
  });
  return out;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms,
                   std::map<std::string, std::string> metadata)
    : n_qubits_(n_qubits),
      terms_(canonicalize(n_qubits, std::move(terms))),
      metadata_(std::move(metadata)) {}

void PauliSum::set_metadata(std::string key, std::string value) {
  metadata_[std::move(key)] = std::move(value);
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliTerm& t) {
    return std::abs(t.coefficient.imag()) <= tol;
  });
}

Complex PauliSum::identity_coefficient() const {
  if (!terms_.empty() && terms_.front().word.is_identity()) {
    return terms_.front().coefficient;
  }
  return {0.0, 0.0};
}

PauliSum PauliSum::adjoint() const {
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coefficient = std::conj(t.coefficient);
  return PauliSum(n_qubits_, std::move(out), metadata_);
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  std::vector<PauliTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return PauliSum(n_qubits_, std::move(all));
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
  return *this + other * Complex{-1.0, 0.0};
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  if (n_qubits_ != other.n_qubits_) {
    throw std::invalid_argument("qubit-count mismatch in PauliSum product");
  }
  std::vector<PauliTerm> all;
  all.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) all.push_back(multiply(a, b));
  }
  return PauliSum(n_qubits_, std::move(all));
}

PauliSum PauliSum::operator*(Complex scale) const {
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coefficient *= scale;
  return PauliSum(n_qubits_, std::move(out));
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].word != b.terms_[k].word ||
        a.terms_[k].coefficient != b.terms_[k].coefficient) {
      return false;
    }
  }
  return true;
}

namespace {

void accumulate_dense(DenseMatrix& m, PauliWord word, Complex coefficient) {
  const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
  const Complex base = coefficient * i_power(word.y_count());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b & word.z_mask()) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ word.x_mask()),
      static_cast<Eigen::Index>(b)) += sign * base;
  }
}

void check_dense_size(int n) {
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense realization limited to " +
                                std::to_string(kMaxDenseQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

}  // namespace

DenseMatrix to_dense(const PauliSum& sum) {
  check_dense_size(sum.n_qubits());
  const Eigen::Index dim = Eigen::Index{1} << sum.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& t : sum.terms()) accumulate_dense(m, t.word, t.coefficient);
  return m;
}

DenseMatrix to_dense(const PauliTerm& term) {
  check_dense_size(term.n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << term.n_qubits;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  accumulate_dense(m, term.word, term.coefficient);
  return m;
}

StructureReport expectation_structure_check(const PauliSum& sum) {
  StructureReport report;
  report.term_count = sum.size();
  report.locality_histogram.assign(static_cast<std::size_t>(sum.n_qubits()) + 1, 0);
  for (const auto& t : sum.terms()) {
    ++report.locality_histogram[static_cast<std::size_t>(t.word.weight())];
    report.max_abs_imag = std::max(report.max_abs_imag, std::abs(t.coefficient.imag()));
    if (t.word.is_identity()) report.has_identity = true;
  }
  report.hermitian = report.max_abs_imag <= kHermitianTolerance;
  return report;
}

std::string StructureReport::to_string() const {
  std::ostringstream out;
  out << "terms: " << term_count << "\n"
      << "hermitian: " << (hermitian ? "yes" : "no") << "\n"
      << "identity term: " << (has_identity ? "yes" : "no") << "\n"
      << "max |Im c|: " << max_abs_imag << "\n"
      << "locality:";
  for (std::size_t w = 0; w < locality_histogram.size(); ++w) {
    if (locality_histogram[w] != 0) out << " " << w << ":" << locality_histogram[w];
  }
  out << "\n";
  return out.str();
}

}  // namespace vqse
