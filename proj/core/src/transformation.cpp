#include "semivar/transformation.hpp"

#include <map>      // for map
#include <utility>  // for move

namespace semivar {

  Transformation::Transformation(std::vector<element_type> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw InvalidArgument("a transformation needs degree at least 1");
    }
    for (auto x : _images) {
      if (x >= _images.size()) {
        throw InvalidArgument("transformation image " + std::to_string(x)
                              + " out of range for degree "
                              + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<element_type> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<element_type>(i);
    }
    return Transformation(std::move(images));
  }

  Transformation Transformation::constant(std::size_t  degree,
                                          element_type value) {
    return Transformation(std::vector<element_type>(degree, value));
  }

  std::string Transformation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(_images[i]);
    }
    return out + "]";
  }

  Transformation operator*(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw InvalidArgument("cannot compose transformations of degree "
                            + std::to_string(f.degree()) + " and "
                            + std::to_string(g.degree()));
    }
    std::vector<element_type> images(f.degree());
    for (std::size_t x = 0; x < images.size(); ++x) {
      images[x] = g[f[static_cast<element_type>(x)]];
    }
    return Transformation(std::move(images));
  }

  GeneratedSemigroup
  generate_from_transformations(std::span<Transformation const> gens,
                                std::size_t                     cap) {
    if (gens.empty()) {
      throw InvalidArgument("at least one generator is required");
    }
    std::size_t const degree = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw InvalidArgument("generators have different degrees");
      }
    }

    std::vector<Transformation>              elements;
    std::map<Transformation, element_type>   index;
    auto                                     add = [&](Transformation f) {
      if (index.contains(f)) {
        return;
      }
      if (elements.size() == cap) {
        throw CapExceeded("closure exceeds " + std::to_string(cap)
                          + " elements");
      }
      index.emplace(f, static_cast<element_type>(elements.size()));
      elements.push_back(std::move(f));
    };

    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        add(elements[i] * g);
      }
    }

    std::size_t const         n = elements.size();
    std::vector<element_type> entries(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        entries[a * n + b] = index.at(elements[a] * elements[b]);
      }
    }
    return {CayleyTable(n, std::move(entries)), std::move(elements)};
  }

  GeneratedSemigroup full_transformation_monoid(std::size_t m) {
    std::vector<Transformation> gens;
    gens.push_back(Transformation::identity(m));
    if (m > 1) {
      std::vector<element_type> cycle(m), swap(m), collapse(m);
      for (std::size_t i = 0; i < m; ++i) {
        cycle[i]    = static_cast<element_type>((i + 1) % m);
        swap[i]     = static_cast<element_type>(i);
        collapse[i] = static_cast<element_type>(i);
      }
      std::swap(swap[0], swap[1]);
      collapse[m - 1] = 0;
      gens.emplace_back(std::move(cycle));
      gens.emplace_back(std::move(swap));
      gens.emplace_back(std::move(collapse));
    }
    return generate_from_transformations(gens, 1 << 20);
  }

}  // namespace semivar
