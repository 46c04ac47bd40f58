#include "tvb/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tvb {

void Partition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "|";
    os << "{";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ",";
      os << blocks[i][j];
    }
    os << "}";
  }
  return os.str();
}

Partition Partition::parse(const std::string& line) {
  Partition p;
  std::vector<int> cur;
  bool in_block = false;
  bool expect_sep = false;   // just closed a block: only '|' or end may follow
  bool pending_block = false;  // just saw '|': another block must follow
  std::string num;
  auto fail = [&]() -> std::runtime_error {
    return std::runtime_error("bad partition syntax: '" + line + "'");
  };
  auto flush_num = [&] {
    if (num.empty()) throw fail();
    cur.push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    if (ch == '{') {
      if (in_block || expect_sep) throw fail();
      in_block = true;
      pending_block = false;
      cur.clear();
    } else if (ch == '}') {
      if (!in_block) throw fail();
      flush_num();
      p.blocks.push_back(cur);
      in_block = false;
      expect_sep = true;
    } else if (ch == ',') {
      if (!in_block) throw fail();
      flush_num();
    } else if (ch == '|') {
      if (!expect_sep) throw fail();
      expect_sep = false;
      pending_block = true;
    } else if (ch >= '0' && ch <= '9') {
      if (!in_block) throw fail();
      num.push_back(ch);
    } else {
      throw fail();
    }
  }
  if (in_block || pending_block || p.blocks.empty()) throw fail();
  p.canonicalize();
  return p;
}

}  // namespace tvb
