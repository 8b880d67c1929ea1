// Minimal generators, flags and relations of M(SL(2,3)).
#include <iostream>
#include <string>

#include "mca/mca.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : std::string(MCA_DATA_DIR) + "/sl23.json";
  mca::GroupCharData g = mca::load_dataset(path);
  mca::MonoidPresentation m = mca::hilbert_basis(g);

  std::cout << g.name << ": " << m.size() << " minimal generators\n";
  for (std::size_t i = 0; i < m.size(); ++i) std::cout << "  t" << i + 1 << " = " << mca::render_monomial(m[i]) << "\n";

  mca::ClassificationReport c = mca::classify(m, g.degrees());
  std::cout << "monomial: " << (c.monomial ? "yes" : "no") << "\n";
  std::cout << "almost monomial: " << (c.almost_monomial ? "yes" : "no") << "\n";
  for (const auto& b : mca::markov_basis(m)) std::cout << "relation: " << mca::render_binomial(b) << "\n";

  mca::NormalizationResult n = mca::normalize(m);
  std::cout << "normal: " << (n.added.empty() ? "yes" : "no") << "\n";
  return 0;
}
