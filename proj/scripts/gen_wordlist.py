#!/usr/bin/env python3
"""Regenerates include/nlgp/words_en.hpp (bundled English word list).

The list is a stopword set (the scikit-learn English stop words) plus a
curated base vocabulary of common English words with regular inflections
expanded (plural / past / progressive forms). Roughly 3,000 entries.
"""
import sys

STOPWORDS = """a about above across after afterwards again against all almost alone along
already also although always am among amongst amoungst amount an and another any anyhow
anyone anything anyway anywhere are around as at back be became because become becomes
becoming been before beforehand behind being below beside besides between beyond bill
both bottom but by call can cannot cant co con could couldnt cry de describe detail do
done down due during each eg eight either eleven else elsewhere empty enough etc even
ever every everyone everything everywhere except few fifteen fifty fill find fire first
five for former formerly forty found four from front full further get give go had has
hasnt have he hence her here hereafter hereby herein hereupon hers herself him himself
his how however hundred i ie if in inc indeed interest into is it its itself keep last
latter latterly least less ltd made many may me meanwhile might mill mine more moreover
most mostly move much must my myself name namely neither never nevertheless next nine
no nobody none noone nor not nothing now nowhere of off often on once one only onto or
other others otherwise our ours ourselves out over own part per perhaps please put
rather re same see seem seemed seeming seems serious several she should show side since
sincere six sixty so some somehow someone something sometime sometimes somewhere still
such system take ten than that the their them themselves then thence there thereafter
thereby therefore therein thereupon these they thick thin third this those though three
through throughout thru thus to together too top toward towards twelve twenty two un
under until up upon us very via was we well were what whatever when whence whenever
where whereafter whereas whereby wherein whereupon wherever whether which while whither
who whoever whole whom whose why will with within without would yet you your yours
yourself yourselves""".split()

# Base verbs. Regular inflections are generated below; irregular past forms
# that matter for comment text are listed explicitly in EXTRA.
VERBS = """accept access add adjust aggregate align allocate allow analyze append apply
approximate assign assume attach average balance batch begin bind build cache calculate
calibrate cast change chart check choose clamp clean clear clip close cluster collect
combine compare compile complete compress compute concatenate configure confirm connect
construct contain convert copy correct count create crop debug decode decompose decrease
define delete denote deploy derive describe deserialize detect determine display divide
download draw drop dump duplicate embed emit enable encode end enforce enrich ensure
enter enumerate estimate evaluate examine exclude execute exit expand expect explain
explore export extend extract fail fetch fill filter finalize finish fit fix flatten
flip fold follow force forecast format fuse generate group grow handle hash help hide
hold ignore implement import improve impute include increase infer initialize inject
insert inspect install instantiate integrate interpolate invert invoke iterate join keep
label learn limit link list load locate log look loop lower map mark mask match measure
merge minimize mix model modify monitor move multiply need normalize note notice obtain
open optimize order output overfit override pack pad parse partition pass paste perform
pick pivot place plot predict prepare preprocess print process produce project prune
pull push query rank read rebuild recall recompute record reduce refer refine reflect
reload remain remove rename render repeat replace report require resample rescale reset
reshape resize resolve restore retain retrieve return reverse review rotate round run
sample save scale scan score search seed select send separate serialize set setup shift
shuffle simulate skip slice smooth solve sort specify split stack standardize start stop
store stream strip style submit subset subtract sum summarize support swap sync tag take
terminate test time tokenize track train transform translate transpose truncate try tune
unpack unzip update upload use validate verify view visualize wait walk want warn watch
weight work wrap write zip zoom""".split()

# Base nouns (plurals generated).
NOUNS = """accuracy algorithm alias amount analysis anomaly answer api application
architecture area argument array arrow article aspect attribute author average axis
background backup bar base baseline basis batch bias bin bit block board body book
boundary box branch bucket buffer bug byte calculation calendar callback candidate
capacity caption case category cell chain chance channel chapter character chart check
checkpoint choice city class classifier cleanup client cloud cluster code coefficient
collection color column combination command comment company comparison component
compression computer concept condition confidence config configuration connection
console constant constraint content context control convergence conversion coordinate
copy core corpus correlation cost country course covariance cpu criterion cross csv
curve customer cycle dashboard data database dataframe dataset date day decade decision
decoder default degree delimiter density dependency depth description design detail
detector deviation device dictionary difference digit dimension direction directory
disk distance distribution document dollar domain dot driver duration edge editor
effect element email encoder encoding end engine entity entry environment epoch
equation error estimate event evidence example exception experiment expression factor
feature field figure file filename filter flag float folder font form formula fraction
frame framework frequency function gain game gap gender goal gpu gradient graph grid
group half handler hash head header health heatmap height histogram history home hour
house html hyperparameter id idea image increment index info information input instance
integer intercept interface interval inverse issue item iteration job json kernel key
keyword kind knowledge label lambda language layer layout leak learner legend length
letter level library license life lifetime limit line link list literal location
logger logic loop loss machine magnitude manager manifold map margin marker mask
matrix maximum mean measure median member memory message metadata method metric
minimum minute mistake mode model module moment money month movie name network neuron
node noise norm notebook number object observation offset operation operator optimizer
option order origin outcome outlier output overview packet page pair pandas panel
paper paragraph parameter parent part partition password patch path pattern peak
people percent percentage performance period person phase phrase picture piece pipeline
pixel place plan plane platform player point pointer policy population position power
precision prediction prefix preview price probability problem procedure product profile
program progress project property proportion python quality quantity quarter query
question queue radius random range rate ratio reader reason recall recipe record
recurrence reference region regression regressor relation relationship report
repository request research residual resolution resource response rest result review
reward right roc role root round route row rule run runtime salary sample scale scatter
scenario schema school science scientist score screen script season second section
sector seed segment selection sentence sequence series server service session shape
sheet shell signal site size skew slice slope snapshot software solution source space
spectrum speed spike spread square stack stage standard start state statement station
statistic stats status step stock stop storage store story strategy stream string
structure student style subject subplot subset substring suffix sum summary support
surface survey symbol syntax table tag target task team temperature template tensor
term test text theme theory thing threshold tick ticker time timestamp timezone title
token tool topic total trace track trade traffic training transaction transformation
tree trend trial tuple type union unit update url user utility validation value
variable variance vector verbose version video view visualization vocabulary voice
volume wave web website week weekday weight wheel width window word worker workflow
workspace world year zero zone""".split()

# Adjectives / adverbs / misc words kept as-is.
OTHERS = """able absolute actual additional advanced aggregated alphabetical alternative
annual appropriate approximate arbitrary ascending automated automatic available bad
balanced basic best better big binary blank blue bold boolean bright broken categorical
central certain cheap circular classic clean clear clever close cold common compact
complete complex conditional consistent constant continuous convenient correct
corresponding cumulative current custom daily dark dead deep dense dependent descending
detailed different difficult direct dirty discrete distinct double dynamic early easy
efficient eighth empirical entire equal equivalent essential exact excellent
exponential external extra false fast feasible final fine finite fifth flat flexible
following foreign formal fourth free frequent fresh friendly frozen fun general generic
global good gray great greedy green happy hard heavy helpful hidden high higher highest
horizontal hot huge human identical important impossible incremental independent
initial inline inner integrated interactive interesting internal invalid invariant
inverse isolated joint key kind large larger largest late latest lazy leading left
light likely linear little local logical logistic long longer loose loud low lower
lowest main major manual marginal maximal maximum mean median medium middle minimal
minimum minor missing mixed moderate modern monthly multiple mutual naive narrow
native natural nearby nearest necessary negative nested new nice ninth noisy nominal
normal notable null numeric numerical observed odd official old open optimal optional
orange ordinal ordinary original orthogonal outer overall parallel partial particular
past perfect periodic persistent personal physical plain polynomial poor popular
positive possible practical precise preliminary present pretty previous primary prior
private probable professional proper public pure quadratic quarterly quick quiet random
rare raw ready real reasonable recent rectangular recursive red redundant regular
relative relevant reliable remaining remote repeated representative residual rich
robust rolling rough rounded safe same scientific seasonal secondary secure sensible
sensitive separate sequential seventh shallow sharp short shorter significant similar
simple simultaneous single sixth slow small smaller smallest smart smooth soft solid
sparse spatial special specific sporadic stable standalone static stationary
statistical steady steep sticky straight strange strict strong structured subsequent
subtle sufficient suitable sunny sure symmetric synthetic temporal temporary tenth
terminal tiny top total tough transparent true typical unbalanced unbiased uniform
unique universal unknown unlikely unsigned unstable unused upper urban useful useless
usual valid variable various verbose vertical viable virtual visible visual warm weak
weekly weird white wide wider wild wise wrong yearly yellow young"""  .split()

# Irregular forms and extra everyday words worth having exact hits for.
EXTRA = """added ago also am an and any are as at be because been began begin being
below between both broke broken built but by came can chose chosen come could did do
does doing done down drawn drew each else etc few for from further gave get gets
getting given gives go goes going gone got had has have having he her here him his
how however if in into is it its just kept knew know known last left let lets like
made make makes making many may maybe me might more most much my new no none nor not
now of off ok okay on once only onto or other our out over own per put ran read
really right said same saw say see seen set she so some soon sure taken takes taking
than that the their them then there these they things this those though thought
through thus to today together too took tried tries under unless untrained until up
upon us used uses using via want was way we went were what when where whereas whether
which while who whose why will with within without won would wrote yes yet you your
also aka vs eg ie nan dataframe numpy pandas matplotlib seaborn sklearn scikit scipy
keras tensorflow pytorch jupyter python csv tsv json html url api sql regex boolean
int str bool dict tuple lambda args kwargs dtype iloc groupby pyplot xlabel ylabel
xticks yticks cmap figsize barplot boxplot countplot lineplot histplot heatmap
subplots dropna fillna isnull notnull astype tolist values unique nunique
describe head tail shape concat merge pivot melt stddev stdev min max arg len num
idx tmp temp init util utils misc todo fixme nb ptr ref val var func fn obj elem
attr prop cfg ctx src dst buf err msg res req resp db conn cur idx"""  .split()


def inflect(words, kind):
    out = set(words)
    double_final = {"plot", "fit", "drop", "map", "split", "stop", "wrap", "zip",
                    "pad", "tag", "sum", "log", "clip", "flip", "swap", "scan",
                    "trim", "skip", "crop", "bin", "plan", "step", "run", "set",
                    "begin", "submit", "format"}
    for w in words:
        if kind == "verb":
            if w.endswith("e"):
                out.update({w + "s", w + "d", w[:-1] + "ing"})
            elif w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
                out.update({w[:-1] + "ies", w[:-1] + "ied", w + "ing"})
            elif w in double_final:
                out.update({w + "s", w + w[-1] + "ed", w + w[-1] + "ing"})
            elif w.endswith(("s", "x", "z", "ch", "sh")):
                out.update({w + "es", w + "ed", w + "ing"})
            else:
                out.update({w + "s", w + "ed", w + "ing"})
        elif kind == "noun":
            if w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
                out.add(w[:-1] + "ies")
            elif w.endswith(("s", "x", "z", "ch", "sh")):
                out.add(w + "es")
            else:
                out.add(w + "s")
    return out


# Words that appear in some frequency lists but are not English; never include.
FOREIGN = {"en", "el", "la", "las", "los", "le", "les", "des", "der", "die", "das",
           "und", "una", "uno", "del", "por", "para", "est", "si", "il", "au", "aux",
           "da", "di", "se", "su", "et", "ce", "je", "tu", "ne", "un"}


def main():
    words = set()
    words.update(STOPWORDS)
    words.update(inflect(VERBS, "verb"))
    words.update(inflect(NOUNS, "noun"))
    words.update(OTHERS)
    words.update(EXTRA)
    words = {w.lower() for w in words if w.isalpha()}
    words -= FOREIGN
    ordered = sorted(words)
    sys.stderr.write(f"{len(ordered)} words\n")

    with open("include/nlgp/words_en.hpp", "w") as f:
        f.write("// Generated by scripts/gen_wordlist.py. Do not edit by hand.\n")
        f.write("#pragma once\n\n#include <string_view>\n\n")
        f.write("namespace nlgp::detail {\n\n")
        f.write("inline constexpr std::string_view kEnglishWords[] = {\n")
        line = "   "
        for w in ordered:
            tok = f' "{w}",'
            if len(line) + len(tok) > 96:
                f.write(line + "\n")
                line = "   "
            line += tok
        if line.strip():
            f.write(line + "\n")
        f.write("};\n\n} // namespace nlgp::detail\n")


if __name__ == "__main__":
    main()
