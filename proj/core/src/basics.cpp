#include "wittflag/basics.hpp"

#include <cctype>

namespace wittflag {

SubsetMask SubsetMask::parse(const std::string& spec, int rank) {
  if (spec.empty() || spec == "none" || spec == "-") return SubsetMask();
  if (spec == "all") return full(rank);
  // mask form: exactly rank characters over {o,O,*,x}
  bool mask_form = true;
  for (char ch : spec)
    if (ch != 'o' && ch != 'O' && ch != '*' && ch != 'x') mask_form = false;
  if (mask_form) {
    if (static_cast<int>(spec.size()) != rank)
      throw std::invalid_argument("subset mask '" + spec + "' has " +
                                  std::to_string(spec.size()) + " nodes, expected " +
                                  std::to_string(rank));
    SubsetMask m;
    for (int i = 0; i < rank; ++i)
      if (spec[static_cast<size_t>(i)] == '*' || spec[static_cast<size_t>(i)] == 'x')
        m.bits |= 1u << i;
    return m;
  }
  // comma-separated node list
  SubsetMask m;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    if (tok.empty()) throw std::invalid_argument("empty entry in subset spec '" + spec + "'");
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad node index '" + tok + "' in subset spec");
    int node = std::stoi(tok);
    if (node < 1 || node > rank)
      throw std::invalid_argument("node index " + tok + " out of range 1.." +
                                  std::to_string(rank));
    m = m.with(node);
  }
  return m;
}

}  // namespace wittflag
