#include "tdvr/random.hpp"

#include "tdvr/errors.hpp"

namespace tdvr {

namespace {

template <class T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

Scalar random_unit(const RingSpec& ring, std::mt19937_64& rng) {
  for (;;) {
    Scalar s(ring, uniform<std::uint64_t>(rng, 1, ring.modulus() - 1));
    if (s.is_unit()) return s;
  }
}

Monomial random_monomial(std::size_t nvars, std::uint64_t degree, std::mt19937_64& rng) {
  std::vector<std::uint32_t> e(nvars, 0);
  if (nvars == 0) return Monomial(std::move(e));
  for (std::uint64_t k = 0; k < degree; ++k) ++e[uniform<std::size_t>(rng, 0, nvars - 1)];
  return Monomial(std::move(e));
}

}  // namespace

InstanceShape random_shape(std::mt19937_64& rng) {
  static const std::uint32_t primes[] = {2, 3, 5};
  InstanceShape s;
  s.p = primes[uniform<int>(rng, 0, 2)];
  s.a = uniform<std::uint32_t>(rng, 1, 4);
  s.flavor = uniform<int>(rng, 0, 1) ? Flavor::MixedChar : Flavor::EquiChar;
  s.nvars = uniform<std::size_t>(rng, 1, 2);
  s.rank = uniform<std::uint32_t>(rng, 1, 2);
  s.ngens = uniform<std::size_t>(rng, 1, 4);
  s.max_degree = 3;
  return s;
}

Scalar random_scalar(const RingSpec& ring, std::mt19937_64& rng) {
  const std::uint32_t v = uniform<std::uint32_t>(rng, 0, ring.length());
  if (v == ring.length()) return Scalar(ring);
  return random_unit(ring, rng) * Scalar::uniformizer_power(ring, v);
}

Element random_element(const ModulePtr& module, std::uint64_t degree, bool homogeneous, std::size_t max_terms,
                       std::mt19937_64& rng, bool pi_homogeneous) {
  const RingSpec& ring = module->ring();
  if (pi_homogeneous && ring.flavor() != Flavor::EquiChar)
    throw PreconditionError("pi-homogeneous elements need F_p[pi]/(pi^a)");
  const std::uint32_t layer = uniform<std::uint32_t>(rng, 0, ring.length() - 1);
  for (;;) {
    std::vector<Term> terms;
    const std::size_t count = uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, max_terms));
    for (std::size_t k = 0; k < count; ++k) {
      const std::uint64_t d = homogeneous ? degree : uniform<std::uint64_t>(rng, 0, degree);
      Scalar c = pi_homogeneous ? Scalar(ring, uniform<std::uint64_t>(rng, 1, ring.p() - 1)) *
                                      Scalar::uniformizer_power(ring, layer)
                                : random_scalar(ring, rng);
      // bias toward terms that survive
      if (c.is_zero() && uniform<int>(rng, 0, 1)) c = random_unit(ring, rng);
      terms.push_back({c, {random_monomial(module->nvars(), d, rng), uniform<std::uint32_t>(rng, 0, module->rank() - 1)}});
    }
    Element e(module, std::move(terms));
    if (!e.is_zero()) return e;
  }
}

RandomInstance random_instance(const InstanceShape& s, std::mt19937_64& rng) {
  std::vector<std::string> vars;
  static const char* names[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < s.nvars; ++i) vars.emplace_back(i < 4 ? names[i] : "v" + std::to_string(i));
  RandomInstance inst{make_module(RingSpec(s.p, s.a, s.flavor), vars, s.rank), {}};
  for (std::size_t k = 0; k < s.ngens; ++k) {
    // x-homogeneous generators of degree 0 tend to kill a whole component
    const std::uint64_t lo = s.x_homogeneous && s.max_degree > 0 ? 1 : 0;
    const std::uint64_t d = uniform<std::uint64_t>(rng, lo, s.max_degree);
    inst.generators.push_back(random_element(inst.module, d, s.x_homogeneous, s.max_terms, rng, s.pi_homogeneous));
  }
  return inst;
}

}  // namespace tdvr
