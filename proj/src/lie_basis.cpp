#include "fpa/lie_basis.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fpa/errors.hpp"

namespace fpa {

namespace detail {

struct LieNode {
  Word word;
  const LieNode* left = nullptr;
  const LieNode* right = nullptr;
  std::vector<int> counts;  // counts[i - 1] = occurrences of letter i
};

}  // namespace detail

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const noexcept {
    auto h1 = std::hash<const void*>{}(p.first);
    auto h2 = std::hash<const void*>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

struct BasisLayers {
  int max_degree = 0;
  std::vector<LieMonomial> elements;
  std::unordered_map<const detail::LieNode*, std::size_t> position;
};

std::atomic<std::size_t> g_capacity{1'000'000};

// Number of Lyndon words of length exactly len over k letters.
std::size_t lyndon_count(int k, int len) {
  auto mobius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    }
    if (m > 1) result = -result;
    return result;
  };
  long double total = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    long double power = 1;
    for (int i = 0; i < len / d; ++i) power *= k;
    total += mobius(d) * power;
  }
  return static_cast<std::size_t>(total / len + 0.5L);
}

}  // namespace

class LieRegistry {
 public:
  static LieRegistry& instance() {
    static LieRegistry registry;
    return registry;
  }

  LieMonomial intern(const Word& word) {
    {
      std::lock_guard lock(node_mutex_);
      if (auto it = nodes_.find(word); it != nodes_.end()) return LieMonomial(it->second.get());
    }
    auto node = std::make_unique<detail::LieNode>();
    node->word = word;
    int max_letter = 0;
    for (char c : word) max_letter = std::max(max_letter, static_cast<int>(c));
    node->counts.assign(max_letter, 0);
    for (char c : word) ++node->counts[static_cast<int>(c) - 1];
    if (word.size() > 1) {
      // Standard factorization: the right factor is the longest proper Lyndon suffix.
      for (std::size_t k = 1; k < word.size(); ++k) {
        Word suffix = word.substr(k);
        if (is_lyndon(suffix)) {
          node->left = intern(word.substr(0, k)).node_;
          node->right = intern(suffix).node_;
          break;
        }
      }
    }
    std::lock_guard lock(node_mutex_);
    auto [it, inserted] = nodes_.emplace(word, std::move(node));
    return LieMonomial(it->second.get());
  }

  std::shared_ptr<const LieElement> find_bracket(LieMonomial a, LieMonomial b) {
    std::lock_guard lock(bracket_mutex_);
    auto it = brackets_.find({a.node(), b.node()});
    return it == brackets_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const LieElement> store_bracket(LieMonomial a, LieMonomial b,
                                                  std::shared_ptr<const LieElement> value) {
    std::lock_guard lock(bracket_mutex_);
    auto [it, inserted] = brackets_.emplace(std::pair{a.node(), b.node()}, std::move(value));
    return it->second;
  }

  std::vector<LieMonomial> basis(int n, int max_degree) {
    std::lock_guard lock(basis_mutex_);
    BasisLayers& layers = layers_[n];
    if (layers.max_degree < max_degree) {
      std::size_t total = layers.elements.size();
      for (int len = layers.max_degree + 1; len <= max_degree; ++len) {
        total += lyndon_count(n, len);
        if (total > g_capacity.load()) {
          throw CapacityError("Lie basis on " + std::to_string(n) + " generators up to degree " +
                              std::to_string(max_degree) + " exceeds capacity " +
                              std::to_string(g_capacity.load()));
        }
      }
      for (int len = layers.max_degree + 1; len <= max_degree; ++len) {
        for (const Word& w : lyndon_words_of_length(n, len)) {
          LieMonomial m = intern(w);
          layers.position.emplace(m.node(), layers.elements.size() + 1);
          layers.elements.push_back(m);
        }
        // Published one full degree layer at a time.
        layers.max_degree = len;
      }
    }
    std::vector<LieMonomial> out;
    for (LieMonomial m : layers.elements) {
      if (m.degree() > max_degree) break;
      out.push_back(m);
    }
    return out;
  }

  std::size_t index(LieMonomial m, int n) {
    if (m.max_letter() > n) {
      throw UsageError(m.to_string() + " is not an element of the basis on " + std::to_string(n) +
                       " generators");
    }
    basis(n, m.degree());
    std::lock_guard lock(basis_mutex_);
    return layers_[n].position.at(m.node());
  }

 private:
  // Duval's algorithm, restricted to one length; output is in lexicographic order.
  static std::vector<Word> lyndon_words_of_length(int n, int len) {
    std::vector<Word> out;
    Word w(1, static_cast<char>(1));
    while (!w.empty()) {
      if (static_cast<int>(w.size()) == len) out.push_back(w);
      const std::size_t m = w.size();
      while (static_cast<int>(w.size()) < len) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == static_cast<char>(n)) w.pop_back();
      if (!w.empty()) ++w.back();
    }
    return out;
  }

  std::mutex node_mutex_;
  std::unordered_map<Word, std::unique_ptr<detail::LieNode>> nodes_;
  std::mutex bracket_mutex_;
  std::unordered_map<std::pair<const void*, const void*>, std::shared_ptr<const LieElement>, PairHash>
      brackets_;
  std::mutex basis_mutex_;
  std::map<int, BasisLayers> layers_;
};

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](char x, char y) {
                                        return static_cast<unsigned char>(x) <
                                               static_cast<unsigned char>(y);
                                      });
}

bool is_lyndon(const Word& word) {
  if (word.empty()) return false;
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (!lex_less(word, word.substr(k))) return false;
  }
  return true;
}

LieMonomial LieMonomial::generator(int i) {
  if (i < 1 || i > 127) throw UsageError("generator index out of range: " + std::to_string(i));
  return LieRegistry::instance().intern(Word(1, static_cast<char>(i)));
}

LieMonomial LieMonomial::from_lyndon(const Word& word) {
  for (char c : word) {
    if (c < 1) throw std::invalid_argument("letters are 1-based");
  }
  if (!is_lyndon(word)) throw std::invalid_argument("not a Lyndon word");
  return LieRegistry::instance().intern(word);
}

const Word& LieMonomial::word() const { return node_->word; }
int LieMonomial::degree() const { return static_cast<int>(node_->word.size()); }
bool LieMonomial::is_generator() const { return node_->left == nullptr; }
int LieMonomial::generator_index() const { return static_cast<int>(node_->word.front()); }
int LieMonomial::max_letter() const { return static_cast<int>(node_->counts.size()); }

LieMonomial LieMonomial::left() const {
  if (is_generator()) throw UsageError("generator has no standard factorization");
  return LieMonomial(node_->left);
}

LieMonomial LieMonomial::right() const {
  if (is_generator()) throw UsageError("generator has no standard factorization");
  return LieMonomial(node_->right);
}

std::vector<int> LieMonomial::mdeg(int n) const {
  std::vector<int> out(n, 0);
  for (int i = 0; i < std::min(n, max_letter()); ++i) out[i] = node_->counts[i];
  return out;
}

int LieMonomial::letter_count(int i) const {
  return i >= 1 && i <= max_letter() ? node_->counts[i - 1] : 0;
}

std::size_t LieMonomial::index(int n) const { return LieRegistry::instance().index(*this, n); }

std::string LieMonomial::to_string() const {
  if (is_generator()) return "x" + std::to_string(generator_index());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::strong_ordering operator<=>(LieMonomial a, LieMonomial b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return lex_less(a.word(), b.word()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rational LieElement::coefficient(LieMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(LieMonomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void LieElement::add_scaled(const LieElement& other, const Rational& c) {
  for (const auto& [m, coeff] : other.terms_) add_term(m, c * coeff);
}

LieElement operator*(const Rational& c, const LieElement& a) {
  LieElement out;
  if (sgn(c) == 0) return out;
  for (const auto& [m, coeff] : a.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << m.to_string();
    first = false;
  }
  return os.str();
}

std::vector<LieMonomial> generate_basis(int n, int max_degree) {
  if (n < 1 || n > 127) throw UsageError("generator count out of range");
  if (max_degree < 1) throw UsageError("max degree must be at least 1");
  return LieRegistry::instance().basis(n, max_degree);
}

std::size_t basis_capacity() { return g_capacity.load(); }
void set_basis_capacity(std::size_t ceiling) { g_capacity.store(ceiling); }

std::shared_ptr<const LieElement> normalize_bracket(LieMonomial a, LieMonomial b) {
  static const auto zero = std::make_shared<const LieElement>();
  if (a == b) return zero;
  LieRegistry& registry = LieRegistry::instance();
  if (auto cached = registry.find_bracket(a, b)) return cached;

  LieElement result;
  if (lex_less(b.word(), a.word())) {
    result = Rational(-1) * *normalize_bracket(b, a);
  } else if (a.is_generator() || !lex_less(a.right().word(), b.word())) {
    // Standard factorization of ab is (a, b).
    result = LieElement(registry.intern(a.word() + b.word()));
  } else {
    // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    const LieMonomial u1 = a.left();
    const LieMonomial u2 = a.right();
    for (const auto& [t, c] : normalize_bracket(u2, b)->terms()) {
      result.add_scaled(*normalize_bracket(u1, t), c);
    }
    for (const auto& [t, c] : normalize_bracket(u1, b)->terms()) {
      result.add_scaled(*normalize_bracket(u2, t), -c);
    }
  }
  return registry.store_bracket(a, b, std::make_shared<const LieElement>(std::move(result)));
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add_scaled(*normalize_bracket(a, b), ca * cb);
  }
  return out;
}

AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  auto add = [&out](Word w, const Rational& c) {
    auto [it, inserted] = out.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.erase(it);
    }
  };
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Rational c = ca * cb;
      add(wa + wb, c);
      add(wb + wa, -c);
    }
  }
  return out;
}

AssocPoly assoc_expand(LieMonomial m) {
  if (m.is_generator()) return {{m.word(), Rational(1)}};
  return assoc_commutator(assoc_expand(m.left()), assoc_expand(m.right()));
}

AssocPoly assoc_expand(const LieElement& e) {
  AssocPoly out;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [w, cw] : assoc_expand(m)) {
      auto [it, inserted] = out.try_emplace(w, c * cw);
      if (!inserted) {
        it->second += c * cw;
        if (sgn(it->second) == 0) out.erase(it);
      }
    }
  }
  return out;
}

std::string to_string(const AssocPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << "*";
      os << "x" << static_cast<int>(w[i]);
    }
    first = false;
  }
  return os.str();
}

}  // namespace fpa
