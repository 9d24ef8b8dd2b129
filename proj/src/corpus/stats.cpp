#include "caudit/corpus/document.hpp"

#include "caudit/text/textproc.hpp"

namespace caudit::corpus {

std::string_view variant_name(CorpusVariant v) {
    switch (v) {
        case CorpusVariant::NoClean:
            return "noClean";
        case CorpusVariant::NoBlocklist:
            return "noBlocklist";
        case CorpusVariant::Clean:
            return "clean";
    }
    return "?";
}

CorpusStats stats_of(const Document& doc) {
    CorpusStats s;
    s.doc_count = 1;
    s.token_count = text::count_tokens(doc.text);
    s.byte_size = doc.text.size();
    return s;
}

}  // namespace caudit::corpus
