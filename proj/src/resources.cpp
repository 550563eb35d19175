#include "tesim/resources.hpp"

namespace tesim::resources {

const char* const kClOntology = R"RES(# Demonstration computational-linguistics concept hierarchy.
# Format: node_id <TAB> parent_id|- <TAB> label <TAB> synonym1;synonym2;...
# `-` marks the root. Replace this file with a full domain ontology to
# improve linking coverage; the format stays the same.
CL	-	computational linguistics	natural language processing;nlp
ResearchTopic	CL	research topic	research topics
Infrastructure	CL	infrastructure	infrastructures
GeneralApproach	CL	general approach	general approaches
MachineTranslation	ResearchTopic	machine translation	statistical machine translation
InformationExtraction	ResearchTopic	information extraction	
InformationRetrieval	ResearchTopic	information retrieval	document retrieval
SpeechRecognition	ResearchTopic	speech recognition	automatic speech recognition
TextCategorization	ResearchTopic	text categorization	text classification;text category
QuestionAnswering	ResearchTopic	question answering	automatic question answering
TextSummarization	ResearchTopic	text summarization	automatic summarization;document summarization
TextUnderstanding	ResearchTopic	text understanding	message understanding
SemanticSimilarity	ResearchTopic	semantic similarity	semantic textual similarity
WordSegmentation	ResearchTopic	word segmentation	chinese word segmentation
SyntacticParsing	ResearchTopic	syntactic parsing	dependency parsing;parsing
PosTagging	ResearchTopic	part of speech tagging	pos tagging
Lemmatization	ResearchTopic	lemmatization	morphological analysis
RelationExtraction	InformationExtraction	relation extraction	relation detection
EventExtraction	InformationExtraction	event extraction	
NamedEntityRecognition	InformationExtraction	named entity recognition	named entity tagger;entity recognition
OpenInformationExtraction	InformationExtraction	open information extraction	
CrossLanguageRetrieval	InformationRetrieval	cross language information retrieval	multilingual information retrieval;cross linguistic retrieval
SemanticSearch	InformationRetrieval	semantic search	
PlagiarismDetection	InformationRetrieval	plagiarism detection	
TranslationEvaluation	MachineTranslation	machine translation evaluation	
WordAlignment	MachineTranslation	word alignment	
Toolkit	Infrastructure	toolkit	toolkits
KnowledgeBase	Infrastructure	knowledge base	knowledge bases
Corpus	Infrastructure	corpus	corpora;dataset
Organization	Infrastructure	organization	organizations
WordNet	KnowledgeBase	wordnet	
DomainOntology	KnowledgeBase	domain ontology	ontology
Treebank	Corpus	treebank	tree bank
AnnotatedCorpus	Corpus	annotated corpus	labeled corpus
MachineLearning	GeneralApproach	machine learning	statistical learning
PatternMatching	GeneralApproach	pattern matching	pattern based method
KnowledgeEngineering	GeneralApproach	knowledge engineering	
StatisticalMethod	GeneralApproach	statistical method	statistical methods
SupervisedLearning	MachineLearning	supervised learning	supervised machine learning
UnsupervisedLearning	MachineLearning	unsupervised learning	
NeuralNetwork	MachineLearning	neural network	neural networks;deep learning
WordEmbedding	NeuralNetwork	word embedding	word embeddings;word vector
TopicModel	StatisticalMethod	topic model	topic models
LatentSemanticAnalysis	StatisticalMethod	latent semantic analysis	lsa
LatentDirichletAllocation	TopicModel	latent dirichlet allocation	lda
)RES";

const char* const kStyleOntology = R"RES(# Research style hierarchy. Leaves must be exactly the seven style
# categories; the two-level grouping above them is replaceable.
Research	-	research style
PrimaryResearch	Research	primary research
SecondaryStudy	Research	secondary study
TheoreticalOrigination	PrimaryResearch	theoretical origination
MethodologyImprovement	PrimaryResearch	methodology improvement
SystemImplementation	PrimaryResearch	system implementation
IssueSolution	PrimaryResearch	issue solution
Survey	SecondaryStudy	survey
Analysis	SecondaryStudy	analysis
PhenomenonDiscovery	SecondaryStudy	phenomenon discovery
)RES";

const char* const kPatternRules = R"RES(# Extraction patterns: element <TAB> pre|post <TAB> pattern tokens <TAB> priority
# Lower priority wins. Pre-patterns sit immediately before a candidate
# noun phrase (a leading article may be absorbed); post-patterns follow it.
target	pre	the problem of	10
target	pre	problem of	11
target	pre	the task of	12
target	pre	task of	13
target	pre	approach for	20
target	pre	approaches for	21
target	pre	framework for	22
target	pre	frameworks for	23
target	pre	system to	30
target	pre	survey on	31
target	post	overview	50
target	post	evaluation	51
target	post	track	52
target	post	system called	53
target	post	process	54
methodology	pre	by use of	10
methodology	pre	that using	11
methodology	pre	which employ	12
methodology	pre	which employs	13
methodology	pre	takes advantage of	14
methodology	pre	methods of	15
methodology	pre	through an	16
methodology	pre	through a	17
methodology	post	based	50
methodology	post	framework	51
methodology	post	method to	52
methodology	post	algorithm for	53
methodology	post	techniques to	54
methodology	post	is applied	55
methodology	post	performs much better	56
)RES";

const char* const kStyleRules = R"RES(# Title rules: style <TAB> pattern-or-@colon-structural <TAB> priority
# Lower priority wins; patterns match whole-word token sequences in the
# lowercased title. Unmatched titles default to IssueSolution.
SystemImplementation	@colon-structural	0
MethodologyImprovement	improving	10
MethodologyImprovement	improved	11
MethodologyImprovement	improvement	12
Survey	an overview of	15
Survey	overview	16
Survey	survey	17
Survey	introduction	18
PhenomenonDiscovery	exploratory of	20
PhenomenonDiscovery	exploratory	21
PhenomenonDiscovery	the role of	22
Analysis	comparison	25
Analysis	assessing	26
Analysis	evaluating	27
Analysis	evaluation	28
Analysis	analysis	29
Analysis	challenges	30
Analysis	the future for	31
TheoreticalOrigination	model for	33
TheoreticalOrigination	model	34
SystemImplementation	corpus	36
IssueSolution	using	40
IssueSolution	based	41
IssueSolution	focused	42
IssueSolution	framework	43
IssueSolution	expediting	44
IssueSolution	hybrid	45
IssueSolution	exploiting	46
IssueSolution	incorporating	47
IssueSolution	utilizing	48
IssueSolution	methods	49
IssueSolution	extracting	50
IssueSolution	via	51
IssueSolution	approach	52
IssueSolution	measures	53
IssueSolution	use	54
IssueSolution	with	55
IssueSolution	by	56
)RES";

const char* const kTriggerLexicon = R"RES(# Trigger lexicon: one word per line. A sentence containing any of these
# (after light lemmatization) is scanned for topic event items.
propose
present
describe
introduce
develop
design
implement
evaluate
survey
analyze
focus
address
investigate
compare
study
build
construct
create
define
demonstrate
examine
explore
extend
improve
measure
offer
outline
perform
report
show
solve
suggest
summarize
test
train
use
apply
provide
achieve
tackle
)RES";

const char* const kDefaultConfig = R"RES(# Similarity configuration (key=value).
weight.target=0.3
weight.domain=0.25
weight.style=0.25
weight.methodology=0.1
weight.keywords=0.05
weight.date=0.05
backend=onto
domain.backend=onto
lsa.rank=100
)RES";

}  // namespace tesim::resources
