#include "mfring/characters.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "mfring/error.hpp"

namespace mfring {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

unsigned multiplicative_order(unsigned a, unsigned N) {
  if (N == 1) return 1;
  unsigned x = a % N;
  unsigned k = 1;
  while (x != 1 % N) {
    x = static_cast<unsigned>((static_cast<unsigned long>(x) * a) % N);
    ++k;
  }
  return k;
}

// Subgroup generated by `gens` inside (Z/N)^x, as a membership mask.
std::vector<bool> closure(unsigned N, const std::vector<unsigned>& gens) {
  std::vector<bool> in(N, false);
  std::deque<unsigned> queue{1 % N};
  in[1 % N] = true;
  while (!queue.empty()) {
    const unsigned x = queue.front();
    queue.pop_front();
    for (unsigned g : gens) {
      const auto y = static_cast<unsigned>((static_cast<unsigned long>(x) * g) % N);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

UnitGroup::UnitGroup(unsigned N) : modulus_(N), logs_(N) {
  if (N == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  for (unsigned a = 0; a < N; ++a)
    if (std::gcd(a, N) == 1) elements_.push_back(a);

  // Greedy cyclic decomposition: repeatedly adjoin an element of maximal order
  // whose cyclic subgroup meets the current subgroup trivially.
  std::vector<bool> current = closure(N, {});
  std::size_t current_size = 1;
  while (current_size < elements_.size()) {
    unsigned best = 0, best_order = 0;
    for (unsigned a : elements_) {
      if (current[a]) continue;
      const unsigned ord = multiplicative_order(a, N);
      if (ord <= best_order) continue;
      bool trivial_meet = true;
      unsigned long x = a;
      for (unsigned k = 1; k < ord; ++k, x = (x * a) % N) {
        if (current[x]) {
          trivial_meet = false;
          break;
        }
      }
      if (trivial_meet) {
        best = a;
        best_order = ord;
      }
    }
    if (best_order == 0) throw std::logic_error("unit group decomposition failed for N=" + std::to_string(N));
    gens_.push_back(best);
    orders_.push_back(best_order);
    current = closure(N, gens_);
    current_size = static_cast<std::size_t>(std::count(current.begin(), current.end(), true));
    std::size_t product = 1;
    for (unsigned o : orders_) product *= o;
    if (product != current_size) {
      throw std::logic_error("unit group decomposition is not direct for N=" + std::to_string(N));
    }
  }

  // Discrete-log table by enumerating exponent vectors.
  std::vector<unsigned> e(gens_.size(), 0);
  for (std::size_t count = 0; count < elements_.size(); ++count) {
    unsigned long x = 1 % N;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) x = (x * gens_[i]) % N;
    logs_[x] = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
    }
  }
  for (unsigned a : elements_) {
    if (logs_[a].size() != gens_.size()) throw std::logic_error("generators do not cover the unit group");
  }
}

bool UnitGroup::is_unit(long n) const { return std::gcd(static_cast<unsigned>(reduce(n)), modulus_) == 1; }

unsigned UnitGroup::reduce(long n) const { return static_cast<unsigned>(mod(n, static_cast<long>(modulus_))); }

std::shared_ptr<const UnitGroup> unit_group(unsigned N) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot.reset(new UnitGroup(N));
  return slot;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> g, std::vector<unsigned> exps,
                                       std::string label)
    : group_(std::move(g)), exps_(std::move(exps)), label_(std::move(label)) {
  const auto& orders = group_->orders();
  order_ = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    exps_[i] %= orders[i];
    const unsigned ord_i = orders[i] / std::gcd(exps_[i], orders[i]);
    order_ = std::lcm(order_, ord_i);
  }
  table_.assign(group_->modulus(), -1);
  for (unsigned a : group_->elements()) {
    const auto& lg = group_->log(a);
    long e = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const long scaled = static_cast<long>(exps_[i]) * order_ / orders[i];
      e += scaled * lg[i];
    }
    table_[a] = mod(e, order_);
  }
}

DirichletCharacter DirichletCharacter::trivial(unsigned N) {
  auto g = unit_group(N);
  return DirichletCharacter(g, std::vector<unsigned>(g->generators().size(), 0), "one" + std::to_string(N));
}

namespace {

// Builds a character from a value function given as exponent over D.
template <class F>
std::vector<unsigned> exps_from_values(const UnitGroup& g, long D, F&& value_over_D) {
  std::vector<unsigned> exps;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const long v = value_over_D(g.generators()[i]);
    const long o = g.orders()[i];
    if ((v * o) % D != 0) throw Error(Errc::InvalidOrder, "value order does not divide generator order");
    exps.push_back(static_cast<unsigned>(mod(v * o / D, o)));
  }
  return exps;
}

}  // namespace

DirichletCharacter DirichletCharacter::from_assignments(unsigned N, const std::vector<Assignment>& values) {
  auto g = unit_group(N);
  long D = 1;
  for (const auto& a : values) {
    if (a.value.den == 0) throw Error(Errc::InvalidArgument, "root of unity of order 0");
    D = std::lcm(D, static_cast<long>(a.value.den));
  }
  std::map<unsigned, long> val;
  std::vector<std::pair<unsigned, long>> steps;
  for (const auto& a : values) {
    const unsigned r = g->reduce(a.residue);
    if (!g->is_unit(r)) throw Error(Errc::InvalidArgument, std::to_string(a.residue) + " is not a unit mod " + std::to_string(N));
    steps.emplace_back(r, mod(a.value.num * (D / a.value.den), D));
  }
  std::deque<unsigned> queue{1 % N};
  val[1 % N] = 0;
  while (!queue.empty()) {
    const unsigned x = queue.front();
    queue.pop_front();
    for (const auto& [r, e] : steps) {
      const auto y = static_cast<unsigned>((static_cast<unsigned long>(x) * r) % N);
      const long ey = mod(val[x] + e, D);
      auto it = val.find(y);
      if (it == val.end()) {
        val[y] = ey;
        queue.push_back(y);
      } else if (it->second != ey) {
        throw Error(Errc::InvalidOrder, "assigned values are inconsistent with the group relations mod " +
                                            std::to_string(N));
      }
    }
  }
  if (val.size() != g->order()) {
    throw Error(Errc::InvalidArgument, "assigned residues do not generate (Z/" + std::to_string(N) + ")^x");
  }
  auto exps = exps_from_values(*g, D, [&](unsigned a) { return val.at(a); });
  return DirichletCharacter(g, std::move(exps), "");
}

long DirichletCharacter::value_exponent(long n) const {
  return table_[group_->reduce(n)];
}

CycloNum DirichletCharacter::eval(const FieldCtx& ctx, long n) const {
  const long e = value_exponent(n);
  if (e < 0) return CycloNum(ctx);
  if (order_ == 1) return CycloNum(ctx, 1);
  return root_of_unity(ctx, e, order_);
}

DirichletCharacter DirichletCharacter::pow(long k) const {
  std::vector<unsigned> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const long o = group_->orders()[i];
    e[i] = static_cast<unsigned>(mod(static_cast<long>(exps_[i]) * mod(k, o), o));
  }
  return DirichletCharacter(group_, std::move(e), "pow(" + label_ + "," + std::to_string(k) + ")");
}

DirichletCharacter DirichletCharacter::lift(unsigned M) const {
  if (M % modulus() != 0) throw Error(Errc::GroupMismatch, "cannot lift modulus " + std::to_string(modulus()) +
                                                               " to " + std::to_string(M));
  if (M == modulus()) return *this;
  auto g = unit_group(M);
  auto exps = exps_from_values(*g, order_, [&](unsigned a) { return value_exponent(a); });
  return DirichletCharacter(g, std::move(exps), label_);
}

int DirichletCharacter::parity() const {
  const long e = value_exponent(-1);
  return (e == 0) ? 1 : -1;
}

unsigned DirichletCharacter::conductor() const {
  const unsigned N = modulus();
  for (unsigned d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    bool trivial_on_kernel = true;
    for (unsigned a : group_->elements()) {
      if (a % d == 1 % d && table_[a] != 0) {
        trivial_on_kernel = false;
        break;
      }
    }
    if (trivial_on_kernel) return d;
  }
  return N;
}

DirichletCharacter DirichletCharacter::with_label(std::string label) const {
  DirichletCharacter out(*this);
  out.label_ = std::move(label);
  return out;
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  return a.modulus() == b.modulus() && a.exps_ == b.exps_;
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  const unsigned M = std::lcm(a.modulus(), b.modulus());
  const DirichletCharacter la = a.lift(M), lb = b.lift(M);
  const long D = std::lcm(static_cast<long>(la.order()), static_cast<long>(lb.order()));
  auto g = unit_group(M);
  auto exps = exps_from_values(*g, D, [&](unsigned x) {
    return la.value_exponent(x) * (D / la.order()) + lb.value_exponent(x) * (D / lb.order());
  });
  return DirichletCharacter(g, std::move(exps), "mul(" + a.label() + "," + b.label() + ")");
}

const std::vector<std::string>& named_character_names() {
  static const std::vector<std::string> names{"rho3",  "rho4",  "chi5",  "rho5",  "chi7",  "rho7",  "rho8",
                                              "chi9",  "chi11", "rho11", "chi13", "rho13", "chi16", "chi17",
                                              "rho17", "chi19", "rho19", "chi23", "rho23"};
  return names;
}

DirichletCharacter named_character(const std::string& name) {
  using A = DirichletCharacter::Assignment;
  auto make = [&](unsigned N, std::vector<A> v) {
    return DirichletCharacter::from_assignments(N, v).with_label(name);
  };
  auto power_of = [&](const std::string& base, long k) { return named_character(base).pow(k).with_label(name); };
  if (name == "rho3") return make(3, {{-1, {1, 2}}});
  if (name == "rho4") return make(4, {{-1, {1, 2}}});
  if (name == "chi5") return make(5, {{2, {1, 4}}});
  if (name == "rho5") return power_of("chi5", 2);
  if (name == "chi7") return make(7, {{3, {1, 6}}});
  if (name == "rho7") return power_of("chi7", 3);
  if (name == "rho8") return make(8, {{5, {1, 2}}, {-1, {1, 2}}});
  if (name == "chi9") return make(9, {{2, {1, 6}}});
  if (name == "chi11") return make(11, {{2, {1, 10}}});
  if (name == "rho11") return power_of("chi11", 5);
  if (name == "chi13") return make(13, {{2, {1, 12}}});
  if (name == "rho13") return power_of("chi13", 6);
  if (name == "chi16") return make(16, {{-1, {1, 2}}, {5, {1, 4}}});
  // 2 has order 8 mod 17, so the order-16 character is pinned on the primitive root 3.
  if (name == "chi17") return make(17, {{3, {1, 16}}});
  if (name == "rho17") return power_of("chi17", 8);
  if (name == "chi19") return make(19, {{2, {1, 18}}});
  if (name == "rho19") return power_of("chi19", 9);
  if (name == "chi23") return make(23, {{5, {1, 22}}});
  if (name == "rho23") return power_of("chi23", 11);
  throw Error(Errc::UnknownForm, "unknown character '" + name + "'");
}

namespace {

class CharParser {
 public:
  explicit CharParser(const std::string& s) : s_(s) {}

  DirichletCharacter parse() {
    auto c = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, "character '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  DirichletCharacter expr() {
    const std::string id = ident();
    if (id == "conj") {
      expect('(');
      auto c = expr();
      expect(')');
      return c.conjugate().with_label("conj(" + c.label() + ")");
    }
    if (id == "pow") {
      expect('(');
      auto c = expr();
      expect(',');
      const long k = integer();
      expect(')');
      return c.pow(k);
    }
    if (id == "mul") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return a * b;
    }
    if (id.rfind("one", 0) == 0 && id.size() > 3 &&
        std::all_of(id.begin() + 3, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return DirichletCharacter::trivial(static_cast<unsigned>(std::stoul(id.substr(3))));
    }
    return named_character(id);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Accumulates sum_e bucket[e] * zeta_m^e into Q(zeta_L).
CycloNum collect(const FieldCtx& ctx, const std::vector<Integer>& bucket, unsigned m) {
  if (ctx.conductor() % m != 0) {
    throw Error(Errc::ConductorMismatch, "character values of order " + std::to_string(m) +
                                             " do not live in Q(zeta_" + std::to_string(ctx.conductor()) + ")");
  }
  const unsigned step = ctx.conductor() / m;
  std::vector<Rational> coords(ctx.degree(), 0);
  for (unsigned e = 0; e < m; ++e) {
    if (bucket[e] == 0) continue;
    const auto& p = ctx.power(e * step);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (sgn(p[i]) != 0) coords[i] += p[i] * bucket[e];
  }
  return CycloNum::from_poly(ctx, std::move(coords));
}

Integer ipow(unsigned long base, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

DirichletCharacter parse_character(const std::string& text) { return CharParser(text).parse(); }

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer sigma(unsigned power, unsigned long n) {
  Integer s = 0;
  for (auto d : divisors(n)) s += ipow(d, power);
  return s;
}

CycloNum twisted_sigma(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi, unsigned long n) {
  std::vector<Integer> bucket(chi.order(), 0);
  for (auto d : divisors(n)) {
    const long e = chi.value_exponent(static_cast<long>(d % chi.modulus()));
    if (e >= 0) bucket[static_cast<std::size_t>(e)] += ipow(d, power);
  }
  return collect(ctx, bucket, chi.order());
}

CycloNum twisted_sigma_cofactor(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi,
                                unsigned long n) {
  std::vector<Integer> bucket(chi.order(), 0);
  for (auto d : divisors(n)) {
    const long e = chi.value_exponent(static_cast<long>((n / d) % chi.modulus()));
    if (e >= 0) bucket[static_cast<std::size_t>(e)] += ipow(d, power);
  }
  return collect(ctx, bucket, chi.order());
}

CycloNum twisted_sigma_pair(const FieldCtx& ctx, unsigned power, const DirichletCharacter& chi,
                            const DirichletCharacter& psi, unsigned long n) {
  const unsigned m = std::lcm(chi.order(), psi.order());
  std::vector<Integer> bucket(m, 0);
  for (auto d : divisors(n)) {
    const long a = chi.value_exponent(static_cast<long>(d % chi.modulus()));
    const long b = psi.value_exponent(static_cast<long>((n / d) % psi.modulus()));
    if (a < 0 || b < 0) continue;
    const long e = (a * (m / chi.order()) + b * (m / psi.order())) % m;
    bucket[static_cast<std::size_t>(e)] += ipow(d, power);
  }
  return collect(ctx, bucket, m);
}

}  // namespace mfring
