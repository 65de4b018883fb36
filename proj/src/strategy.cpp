#include "costly/strategy.hpp"

#include <stdexcept>

namespace costly {

int MemoryStructure::run_word(const std::vector<int>& word) const {
  if (word.empty()) throw std::invalid_argument("run_word: empty word");
  int state = init[static_cast<std::size_t>(word.front())];
  for (std::size_t i = 1; i < word.size(); ++i) state = run(state, word[i]);
  return state;
}

PositionalStrategy LayeredCertificate::flatten(int vertex_count) const {
  PositionalStrategy flat;
  flat.player = player;
  flat.next.assign(static_cast<std::size_t>(vertex_count), -1);
  for (const CertificateLayer& layer : layers) {
    for (int v : layer.x)
      if (layer.bounded.next.size() > static_cast<std::size_t>(v) && layer.bounded.defined(v))
        flat.next[static_cast<std::size_t>(v)] = layer.bounded.at(v);
    for (int v : layer.attr)
      if (layer.attractor_moves.next.size() > static_cast<std::size_t>(v) &&
          layer.attractor_moves.defined(v))
        flat.next[static_cast<std::size_t>(v)] = layer.attractor_moves.at(v);
  }
  return flat;
}

}  // namespace costly
