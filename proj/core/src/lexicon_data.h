#ifndef CORPSUM_SRC_LEXICON_DATA_H_
#define CORPSUM_SRC_LEXICON_DATA_H_

#include <string_view>

namespace corpsum::internal {

// Contents of core/data/lexicon.tsv, embedded at build time.
std::string_view BuiltinLexiconTsv();

}  // namespace corpsum::internal

#endif  // CORPSUM_SRC_LEXICON_DATA_H_
