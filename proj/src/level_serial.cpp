#include <unordered_map>

#include "kernels.hpp"

namespace weyl::serial {

Level build_next_level(const Level& current, const RootSystemData& rs) {
  const int n = rs.rank();
  const int k = current.index();
  const bool paired = current.paired();
  Level next(k + 1, n, paired);

  // key of an awaited inverse -> ordinal of the element waiting for it
  std::unordered_map<std::string, std::int64_t> dictionary;
  Weight image(static_cast<std::size_t>(n));
  GroupElement e;
  e.name.resize(k + 1);
  e.name_inv.resize(k + 1);
  e.matr = IntMatrix(n);
  e.matr_inv = IntMatrix(n);
  IntMatrix square(n);

  for (std::size_t src = 0; src < current.size(); ++src) {
    auto weight = current.weight(src);
    for (int i = 0; i < n; ++i) {
      if (weight[i] <= 0) continue;
      reflect_weight(weight, i, rs.cartan, image);
      bool accept = true;
      for (int j = i + 1; j < n; ++j) {
        if (image[j] < 0) {
          accept = false;
          break;
        }
      }
      if (!accept) continue;

      const auto ordinal = static_cast<std::int64_t>(next.size());
      if (paired) require_regular(image, k + 1, next.size());
      e.weight = image;
      e.name[0] = i + 1;
      auto word = current.word(src);
      std::copy(word.begin(), word.end(), e.name.begin() + 1);
      auto inv_word = current.inverse_word(src);
      std::copy(inv_word.begin(), inv_word.end(), e.name_inv.begin());
      e.name_inv[k] = i + 1;
      const IntMatrix& refl = rs.reflections[i];
      multiply(refl.data(), current.matrix(src), n, e.matr.data());
      multiply(current.inverse_matrix(src), refl.data(), n, e.matr_inv.data());
      e.n_in_lvl = ordinal;
      e.n_inv_in_lvl = -1;

      if (!paired) {
        next.append(e);
        continue;
      }
      square = multiply(e.matr, e.matr);
      if (square.is_identity()) {
        // involution: its own inverse
        e.n_inv_in_lvl = ordinal;
        next.append(e);
      } else if (auto it = dictionary.find(matrix_key(e.matr)); it != dictionary.end()) {
        // the partner is already waiting for this matrix
        const std::int64_t partner = it->second;
        auto waiting = next.inverse_matrix(static_cast<std::size_t>(partner));
        if (!std::equal(waiting.begin(), waiting.end(), e.matr.data().begin())) {
          throw IntegrityError("pairing dictionary collision at level " + std::to_string(k + 1));
        }
        e.n_inv_in_lvl = partner;
        next.append(e);
        LevelBuilder::inverse_ordinal(next, static_cast<std::size_t>(partner)) = ordinal;
      } else {
        // leave our position for the inverse, which arrives later
        dictionary.emplace(matrix_key(e.matr_inv), ordinal);
        next.append(e);
      }
    }
  }

  if (paired) {
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next.inverse_ordinal(i) < 0) {
        throw IntegrityError("level " + std::to_string(k + 1) + ": element " + std::to_string(i) +
                             " has no inverse in its level");
      }
    }
    LevelBuilder::set_dictionary_entries(next, dictionary.size());
  }
  return next;
}

}  // namespace weyl::serial
