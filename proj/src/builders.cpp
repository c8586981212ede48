#include "ringlab/builders.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ringlab {

int configured_size_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("RINGLAB_SIZE_CAP")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 1024;
  }();
  return cap;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<Elem> table(int n) {
  return std::vector<Elem>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

Elem& at(std::vector<Elem>& t, int n, Elem i, Elem j) {
  return t[static_cast<std::size_t>(i) * n + j];
}

}  // namespace

FiniteRing make_zmod(int n, std::string name) {
  require(n >= 1, "zmod modulus must be positive");
  require(n <= configured_size_cap(), "zmod modulus exceeds the size cap");
  auto add = table(n), mul = table(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      at(add, n, i, j) = static_cast<Elem>((i + j) % n);
      at(mul, n, i, j) = static_cast<Elem>((static_cast<long long>(i) * j) % n);
    }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
  if (name.empty()) name = "Z" + std::to_string(n);
  // n = 1 collapses to the zero ring; the identity scan then finds one = 0.
  return FiniteRing(std::move(name), n, std::move(add), std::move(mul),
                    /*zero=*/0, /*one=*/n == 1 ? 0 : 1, std::nullopt,
                    std::move(labels));
}

namespace {

struct MatrixCodec {
  int k, q, n;  // n = q^(k*k)

  int digit(Elem idx, int i, int j) const {
    int d = i * k + j;
    long long v = idx;
    for (int t = 0; t < d; ++t) v /= q;
    return static_cast<int>(v % q);
  }

  Elem encode(const std::vector<int>& m) const {
    long long idx = 0, place = 1;
    for (int d = 0; d < k * k; ++d) {
      idx += m[static_cast<std::size_t>(d)] % q * place;
      place *= q;
    }
    return static_cast<Elem>(idx);
  }

  std::string label(Elem idx) const {
    std::string out;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int v = digit(idx, i, j);
        if (v == 0) continue;
        if (!out.empty()) out += '+';
        if (v != 1) out += std::to_string(v);
        out += 'e';
        out += std::to_string(i + 1);
        out += std::to_string(j + 1);
      }
    return out.empty() ? "0" : out;
  }
};

}  // namespace

FiniteRing make_matrix_ring(int k, int q, std::string name) {
  require(k >= 1 && q >= 1, "matrix ring needs positive dimension and modulus");
  long long n = 1;
  for (int d = 0; d < k * k; ++d) {
    n *= q;
    require(n <= configured_size_cap(), "matrix ring exceeds the size cap");
  }
  const MatrixCodec codec{k, q, static_cast<int>(n)};
  const int nn = static_cast<int>(n);

  auto add = table(nn), mul = table(nn);
  std::vector<int> buf(static_cast<std::size_t>(k * k));
  for (Elem a = 0; a < nn; ++a)
    for (Elem b = 0; b < nn; ++b) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          buf[static_cast<std::size_t>(i * k + j)] =
              (codec.digit(a, i, j) + codec.digit(b, i, j)) % q;
      at(add, nn, a, b) = codec.encode(buf);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int s = 0;
          for (int t = 0; t < k; ++t) s += codec.digit(a, i, t) * codec.digit(b, t, j);
          buf[static_cast<std::size_t>(i * k + j)] = s % q;
        }
      at(mul, nn, a, b) = codec.encode(buf);
    }

  std::vector<std::string> labels(static_cast<std::size_t>(nn));
  for (Elem i = 0; i < nn; ++i) labels[static_cast<std::size_t>(i)] = codec.label(i);

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      buf[static_cast<std::size_t>(i * k + j)] = i == j ? 1 % q : 0;
  const Elem one = codec.encode(buf);

  if (name.empty()) name = "M" + std::to_string(k) + "Z" + std::to_string(q);
  return FiniteRing(std::move(name), nn, std::move(add), std::move(mul),
                    /*zero=*/0, one, std::nullopt, std::move(labels));
}

std::vector<Elem> transpose_permutation(int k, int q) {
  long long n = 1;
  for (int d = 0; d < k * k; ++d) n *= q;
  const MatrixCodec codec{k, q, static_cast<int>(n)};
  std::vector<Elem> perm(static_cast<std::size_t>(n));
  std::vector<int> buf(static_cast<std::size_t>(k * k));
  for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        buf[static_cast<std::size_t>(i * k + j)] = codec.digit(a, j, i);
    perm[static_cast<std::size_t>(a)] = codec.encode(buf);
  }
  return perm;
}

FiniteRing subring_closure(const FiniteRing& ambient,
                           const std::vector<Elem>& generators,
                           std::string name) {
  require(!generators.empty(), "subring_closure needs at least one generator");
  for (Elem g : generators)
    require(g >= 0 && g < ambient.size(), "generator index out of range");

  std::vector<bool> in(static_cast<std::size_t>(ambient.size()), false);
  std::vector<Elem> members;
  auto push = [&](Elem e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = true;
      members.push_back(e);
    }
  };
  for (Elem g : generators) push(g);
  // Worklist closure under add, neg, mul.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    push(ambient.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = members[j];
      push(ambient.add(x, y));
      push(ambient.mul(x, y));
      push(ambient.mul(y, x));
    }
  }

  std::sort(members.begin(), members.end());
  const int n = static_cast<int>(members.size());
  std::vector<Elem> back(static_cast<std::size_t>(ambient.size()), -1);
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(members[i])] = i;

  auto add = table(n), mul = table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(add, n, i, j) = back[static_cast<std::size_t>(
          ambient.add(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))];
      at(mul, n, i, j) = back[static_cast<std::size_t>(
          ambient.mul(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))];
    }

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    labels[static_cast<std::size_t>(i)] = ambient.label(members[static_cast<std::size_t>(i)]);

  // Inherit the star only when the closure is closed under it.
  std::optional<std::vector<Elem>> star;
  if (ambient.has_star()) {
    std::vector<Elem> perm(static_cast<std::size_t>(n));
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      const Elem s = ambient.star(members[static_cast<std::size_t>(i)]);
      if (back[static_cast<std::size_t>(s)] == -1)
        closed = false;
      else
        perm[static_cast<std::size_t>(i)] = back[static_cast<std::size_t>(s)];
    }
    if (closed) star = std::move(perm);
  }

  const Elem zero = back[static_cast<std::size_t>(ambient.zero())];
  require(zero != -1, "closure does not contain zero");
  if (name.empty()) name = ambient.name() + "_sub";
  // The identity is rediscovered by the constructor scan, not inherited.
  return FiniteRing(std::move(name), n, std::move(add), std::move(mul), zero,
                    std::nullopt, std::move(star), std::move(labels));
}

FiniteRing make_direct_product(const FiniteRing& r1, const FiniteRing& r2,
                               std::string name) {
  const long long n = static_cast<long long>(r1.size()) * r2.size();
  require(n <= configured_size_cap(), "direct product exceeds the size cap");
  const int nn = static_cast<int>(n);
  const int n2 = r2.size();
  auto pack = [&](Elem i, Elem j) { return static_cast<Elem>(i * n2 + j); };

  auto add = table(nn), mul = table(nn);
  for (Elem a = 0; a < nn; ++a)
    for (Elem b = 0; b < nn; ++b) {
      const Elem a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
      at(add, nn, a, b) = pack(r1.add(a1, b1), r2.add(a2, b2));
      at(mul, nn, a, b) = pack(r1.mul(a1, b1), r2.mul(a2, b2));
    }

  std::vector<std::string> labels(static_cast<std::size_t>(nn));
  for (Elem a = 0; a < nn; ++a)
    labels[static_cast<std::size_t>(a)] =
        "(" + r1.label(a / n2) + "," + r2.label(a % n2) + ")";

  std::optional<Elem> one;
  if (r1.is_unital() && r2.is_unital()) one = pack(*r1.one(), *r2.one());

  std::optional<std::vector<Elem>> star;
  if (r1.has_star() && r2.has_star()) {
    std::vector<Elem> perm(static_cast<std::size_t>(nn));
    for (Elem a = 0; a < nn; ++a)
      perm[static_cast<std::size_t>(a)] = pack(r1.star(a / n2), r2.star(a % n2));
    star = std::move(perm);
  }

  if (name.empty()) name = r1.name() + "x" + r2.name();
  return FiniteRing(std::move(name), nn, std::move(add), std::move(mul),
                    pack(r1.zero(), r2.zero()), one, std::move(star),
                    std::move(labels));
}

FiniteRing attach_involution(const FiniteRing& r, const std::vector<Elem>& perm) {
  // The constructor validates the three involution laws and reports the
  // first failing pair in its exception message.
  return FiniteRing(r.name(), r.size(), r.add_table(), r.mul_table(), r.zero(),
                    r.one(), perm, r.labels());
}

}  // namespace ringlab
