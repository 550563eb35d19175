#pragma once

namespace tesim::resources {

// Embedded copies of the editable files under resources/. The toolkit
// runs with zero configuration; pass explicit paths to override any of
// them.
extern const char* const kClOntology;
extern const char* const kStyleOntology;
extern const char* const kPatternRules;
extern const char* const kStyleRules;
extern const char* const kTriggerLexicon;
extern const char* const kDefaultConfig;

}  // namespace tesim::resources
