#pragma once

#include <string>
#include <vector>

namespace tvb {

// A partition of point indices into blocks. Canonical form: indices
// ascending within each block, blocks ordered by their smallest index.
struct Partition {
  std::vector<std::vector<int>> blocks;

  void canonicalize();

  // "{0,1,2}|{3,4,5}" (canonical form's text)
  std::string str() const;
  static Partition parse(const std::string& line);

  bool operator==(const Partition& o) const { return blocks == o.blocks; }
  bool operator<(const Partition& o) const { return blocks < o.blocks; }
};

}  // namespace tvb
