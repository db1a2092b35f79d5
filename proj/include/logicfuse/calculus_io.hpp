// Logic-definition files: declarative, line-oriented descriptions of a
// signature with an optional calculus, truth tables and translation.
//
//   logic NAME
//   signature
//     props <tag>|-            ambient prop family tag ('-' = untagged)
//     sourceprops <tag>        0-ary family p<k>.<tag> (combined logics)
//     ctor <token> <arity>
//   end
//   calculus single|multi
//     axiom <name> : <sequent pattern>
//     rule <name> : <premise> ; ... / <conclusion>
//   end
//   matrix
//     values <v1> <v2> ...
//     designated <v> ...
//     table <ctor> : <row-major values>
//   end
//   source                     source signature of a translation
//     ... (as signature)
//   end
//   translate
//     <ctor> = <map term>
//     prop = <map term with hole _>
//   end
//
// '#' starts a comment.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "logicfuse/semantics.hpp"
#include "logicfuse/sequent.hpp"
#include "logicfuse/sequent.hpp"
#include "logicfuse/support.hpp"
#include "logicfuse/translation.hpp"

namespace logicfuse {

struct LogicFile {
    std::string name;
    Signature sig;
    std::optional<GentzenCalculus> calculus;
    std::optional<MatrixSemantics> semantics;
    std::optional<ConstructorTranslation> translation;  // source block + translate block
};

Result<LogicFile> parse_logic_file(std::string_view text);

std::string export_signature(const Signature& sig);
std::string export_calculus(const GentzenCalculus& g);
std::string export_semantics(const MatrixSemantics& sem);
std::string export_translation(const ConstructorTranslation& t);

// Full file with every part that is present.
std::string export_logic_file(const LogicFile& file);

// Embedded copies of the versioned data files (calculi transcriptions and
// example derivations); throws on an unknown name.
std::string_view embedded_data(std::string_view filename);

}  // namespace logicfuse
