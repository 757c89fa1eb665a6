// Generated by scripts/gen_wordlist.py. Do not edit by hand.
#pragma once

#include <string_view>

namespace nlgp::detail {

inline constexpr std::string_view kEnglishWords[] = {
    "a", "able", "about", "above", "absolute", "accept", "accepted", "accepting", "accepts",
    "access", "accessed", "accesses", "accessing", "accuracies", "accuracy", "across", "actual",
    "add", "added", "adding", "additional", "adds", "adjust", "adjusted", "adjusting",
    "adjusts", "advanced", "after", "afterwards", "again", "against", "aggregate", "aggregated",
    "aggregates", "aggregating", "ago", "aka", "algorithm", "algorithms", "alias", "aliases",
    "align", "aligned", "aligning", "aligns", "all", "allocate", "allocated", "allocates",
    "allocating", "allow", "allowed", "allowing", "allows", "almost", "alone", "along",
    "alphabetical", "already", "also", "alternative", "although", "always", "am", "among",
    "amongst", "amoungst", "amount", "amounts", "an", "analysis", "analysises", "analyze",
    "analyzed", "analyzes", "analyzing", "and", "annual", "anomalies", "anomaly", "another",
    "answer", "answers", "any", "anyhow", "anyone", "anything", "anyway", "anywhere", "api",
    "apis", "append", "appended", "appending", "appends", "application", "applications",
    "applied", "applies", "apply", "applying", "appropriate", "approximate", "approximated",
    "approximates", "approximating", "arbitrary", "architecture", "architectures", "are",
    "area", "areas", "arg", "args", "argument", "arguments", "around", "array", "arrays",
    "arrow", "arrows", "article", "articles", "as", "ascending", "aspect", "aspects", "assign",
    "assigned", "assigning", "assigns", "assume", "assumed", "assumes", "assuming", "astype",
    "at", "attach", "attached", "attaches", "attaching", "attr", "attribute", "attributes",
    "author", "authors", "automated", "automatic", "available", "average", "averaged",
    "averages", "averaging", "axis", "axises", "back", "background", "backgrounds", "backup",
    "backups", "bad", "balance", "balanced", "balances", "balancing", "bar", "barplot", "bars",
    "base", "baseline", "baselines", "bases", "basic", "basis", "basises", "batch", "batched",
    "batches", "batching", "be", "became", "because", "become", "becomes", "becoming", "been",
    "before", "beforehand", "began", "begin", "beginned", "beginning", "begins", "behind",
    "being", "below", "beside", "besides", "best", "better", "between", "beyond", "bias",
    "biases", "big", "bill", "bin", "binary", "bind", "binded", "binding", "binds", "bins",
    "bit", "bits", "blank", "block", "blocks", "blue", "board", "boards", "bodies", "body",
    "bold", "book", "books", "bool", "boolean", "both", "bottom", "boundaries", "boundary",
    "box", "boxes", "boxplot", "branch", "branches", "bright", "broke", "broken", "bucket",
    "buckets", "buf", "buffer", "buffers", "bug", "bugs", "build", "builded", "building",
    "builds", "built", "but", "by", "byte", "bytes", "cache", "cached", "caches", "caching",
    "calculate", "calculated", "calculates", "calculating", "calculation", "calculations",
    "calendar", "calendars", "calibrate", "calibrated", "calibrates", "calibrating", "call",
    "callback", "callbacks", "came", "can", "candidate", "candidates", "cannot", "cant",
    "capacities", "capacity", "caption", "captions", "case", "cases", "cast", "casted",
    "casting", "casts", "categorical", "categories", "category", "cell", "cells", "central",
    "certain", "cfg", "chain", "chains", "chance", "chances", "change", "changed", "changes",
    "changing", "channel", "channels", "chapter", "chapters", "character", "characters",
    "chart", "charted", "charting", "charts", "cheap", "check", "checked", "checking",
    "checkpoint", "checkpoints", "checks", "choice", "choices", "choose", "choosed", "chooses",
    "choosing", "chose", "chosen", "circular", "cities", "city", "clamp", "clamped", "clamping",
    "clamps", "class", "classes", "classic", "classifier", "classifiers", "clean", "cleaned",
    "cleaning", "cleans", "cleanup", "cleanups", "clear", "cleared", "clearing", "clears",
    "clever", "client", "clients", "clip", "clipped", "clipping", "clips", "close", "closed",
    "closes", "closing", "cloud", "clouds", "cluster", "clustered", "clustering", "clusters",
    "cmap", "co", "code", "codes", "coefficient", "coefficients", "cold", "collect",
    "collected", "collecting", "collection", "collections", "collects", "color", "colors",
    "column", "columns", "combination", "combinations", "combine", "combined", "combines",
    "combining", "come", "command", "commands", "comment", "comments", "common", "compact",
    "companies", "company", "compare", "compared", "compares", "comparing", "comparison",
    "comparisons", "compile", "compiled", "compiles", "compiling", "complete", "completed",
    "completes", "completing", "complex", "component", "components", "compress", "compressed",
    "compresses", "compressing", "compression", "compressions", "compute", "computed",
    "computer", "computers", "computes", "computing", "con", "concat", "concatenate",
    "concatenated", "concatenates", "concatenating", "concept", "concepts", "condition",
    "conditional", "conditions", "confidence", "confidences", "config", "configs",
    "configuration", "configurations", "configure", "configured", "configures", "configuring",
    "confirm", "confirmed", "confirming", "confirms", "conn", "connect", "connected",
    "connecting", "connection", "connections", "connects", "consistent", "console", "consoles",
    "constant", "constants", "constraint", "constraints", "construct", "constructed",
    "constructing", "constructs", "contain", "contained", "containing", "contains", "content",
    "contents", "context", "contexts", "continuous", "control", "controls", "convenient",
    "convergence", "convergences", "conversion", "conversions", "convert", "converted",
    "converting", "converts", "coordinate", "coordinates", "copied", "copies", "copy",
    "copying", "core", "cores", "corpus", "corpuses", "correct", "corrected", "correcting",
    "corrects", "correlation", "correlations", "corresponding", "cost", "costs", "could",
    "couldnt", "count", "counted", "counting", "countplot", "countries", "country", "counts",
    "course", "courses", "covariance", "covariances", "cpu", "cpus", "create", "created",
    "creates", "creating", "criterion", "criterions", "crop", "cropped", "cropping", "crops",
    "cross", "crosses", "cry", "csv", "csvs", "ctx", "cumulative", "cur", "current", "curve",
    "curves", "custom", "customer", "customers", "cycle", "cycles", "daily", "dark",
    "dashboard", "dashboards", "data", "database", "databases", "dataframe", "dataframes",
    "datas", "dataset", "datasets", "date", "dates", "day", "days", "db", "de", "dead", "debug",
    "debuged", "debuging", "debugs", "decade", "decades", "decision", "decisions", "decode",
    "decoded", "decoder", "decoders", "decodes", "decoding", "decompose", "decomposed",
    "decomposes", "decomposing", "decrease", "decreased", "decreases", "decreasing", "deep",
    "default", "defaults", "define", "defined", "defines", "defining", "degree", "degrees",
    "delete", "deleted", "deletes", "deleting", "delimiter", "delimiters", "denote", "denoted",
    "denotes", "denoting", "dense", "densities", "density", "dependencies", "dependency",
    "dependent", "deploy", "deployed", "deploying", "deploys", "depth", "depths", "derive",
    "derived", "derives", "deriving", "descending", "describe", "described", "describes",
    "describing", "description", "descriptions", "deserialize", "deserialized", "deserializes",
    "deserializing", "design", "designs", "detail", "detailed", "details", "detect", "detected",
    "detecting", "detector", "detectors", "detects", "determine", "determined", "determines",
    "determining", "deviation", "deviations", "device", "devices", "dict", "dictionaries",
    "dictionary", "did", "difference", "differences", "different", "difficult", "digit",
    "digits", "dimension", "dimensions", "direct", "direction", "directions", "directories",
    "directory", "dirty", "discrete", "disk", "disks", "display", "displayed", "displaying",
    "displays", "distance", "distances", "distinct", "distribution", "distributions", "divide",
    "divided", "divides", "dividing", "do", "document", "documents", "does", "doing", "dollar",
    "dollars", "domain", "domains", "done", "dot", "dots", "double", "down", "download",
    "downloaded", "downloading", "downloads", "draw", "drawed", "drawing", "drawn", "draws",
    "drew", "driver", "drivers", "drop", "dropna", "dropped", "dropping", "drops", "dst",
    "dtype", "due", "dump", "dumped", "dumping", "dumps", "duplicate", "duplicated",
    "duplicates", "duplicating", "duration", "durations", "during", "dynamic", "each", "early",
    "easy", "edge", "edges", "editor", "editors", "effect", "effects", "efficient", "eg",
    "eight", "eighth", "either", "elem", "element", "elements", "eleven", "else", "elsewhere",
    "email", "emails", "embed", "embeded", "embeding", "embeds", "emit", "emited", "emiting",
    "emits", "empirical", "empty", "enable", "enabled", "enables", "enabling", "encode",
    "encoded", "encoder", "encoders", "encodes", "encoding", "encodings", "end", "ended",
    "ending", "ends", "enforce", "enforced", "enforces", "enforcing", "engine", "engines",
    "enough", "enrich", "enriched", "enriches", "enriching", "ensure", "ensured", "ensures",
    "ensuring", "enter", "entered", "entering", "enters", "entire", "entities", "entity",
    "entries", "entry", "enumerate", "enumerated", "enumerates", "enumerating", "environment",
    "environments", "epoch", "epoches", "equal", "equation", "equations", "equivalent", "err",
    "error", "errors", "essential", "estimate", "estimated", "estimates", "estimating", "etc",
    "evaluate", "evaluated", "evaluates", "evaluating", "even", "event", "events", "ever",
    "every", "everyone", "everything", "everywhere", "evidence", "evidences", "exact",
    "examine", "examined", "examines", "examining", "example", "examples", "excellent",
    "except", "exception", "exceptions", "exclude", "excluded", "excludes", "excluding",
    "execute", "executed", "executes", "executing", "exit", "exited", "exiting", "exits",
    "expand", "expanded", "expanding", "expands", "expect", "expected", "expecting", "expects",
    "experiment", "experiments", "explain", "explained", "explaining", "explains", "explore",
    "explored", "explores", "exploring", "exponential", "export", "exported", "exporting",
    "exports", "expression", "expressions", "extend", "extended", "extending", "extends",
    "external", "extra", "extract", "extracted", "extracting", "extracts", "factor", "factors",
    "fail", "failed", "failing", "fails", "false", "fast", "feasible", "feature", "features",
    "fetch", "fetched", "fetches", "fetching", "few", "field", "fields", "fifteen", "fifth",
    "fifty", "figsize", "figure", "figures", "file", "filename", "filenames", "files", "fill",
    "filled", "filling", "fillna", "fills", "filter", "filtered", "filtering", "filters",
    "final", "finalize", "finalized", "finalizes", "finalizing", "find", "fine", "finish",
    "finished", "finishes", "finishing", "finite", "fire", "first", "fit", "fits", "fitted",
    "fitting", "five", "fix", "fixed", "fixes", "fixing", "fixme", "flag", "flags", "flat",
    "flatten", "flattened", "flattening", "flattens", "flexible", "flip", "flipped", "flipping",
    "flips", "float", "floats", "fn", "fold", "folded", "folder", "folders", "folding", "folds",
    "follow", "followed", "following", "follows", "font", "fonts", "for", "force", "forced",
    "forces", "forcing", "forecast", "forecasted", "forecasting", "forecasts", "foreign",
    "form", "formal", "format", "formats", "formatted", "formatting", "former", "formerly",
    "forms", "formula", "formulas", "forty", "found", "four", "fourth", "fraction", "fractions",
    "frame", "frames", "framework", "frameworks", "free", "frequencies", "frequency",
    "frequent", "fresh", "friendly", "from", "front", "frozen", "full", "fun", "func",
    "function", "functions", "further", "fuse", "fused", "fuses", "fusing", "gain", "gains",
    "game", "games", "gap", "gaps", "gave", "gender", "genders", "general", "generate",
    "generated", "generates", "generating", "generic", "get", "gets", "getting", "give",
    "given", "gives", "global", "go", "goal", "goals", "goes", "going", "gone", "good", "got",
    "gpu", "gpus", "gradient", "gradients", "graph", "graphs", "gray", "great", "greedy",
    "green", "grid", "grids", "group", "groupby", "grouped", "grouping", "groups", "grow",
    "growed", "growing", "grows", "had", "half", "halfs", "handle", "handled", "handler",
    "handlers", "handles", "handling", "happy", "hard", "has", "hash", "hashed", "hashes",
    "hashing", "hasnt", "have", "having", "he", "head", "header", "headers", "heads", "health",
    "healths", "heatmap", "heatmaps", "heavy", "height", "heights", "help", "helped", "helpful",
    "helping", "helps", "hence", "her", "here", "hereafter", "hereby", "herein", "hereupon",
    "hers", "herself", "hidden", "hide", "hided", "hides", "hiding", "high", "higher",
    "highest", "him", "himself", "his", "histogram", "histograms", "histories", "history",
    "histplot", "hold", "holded", "holding", "holds", "home", "homes", "horizontal", "hot",
    "hour", "hours", "house", "houses", "how", "however", "html", "htmls", "huge", "human",
    "hundred", "hyperparameter", "hyperparameters", "i", "id", "idea", "ideas", "identical",
    "ids", "idx", "ie", "if", "ignore", "ignored", "ignores", "ignoring", "iloc", "image",
    "images", "implement", "implemented", "implementing", "implements", "import", "important",
    "imported", "importing", "imports", "impossible", "improve", "improved", "improves",
    "improving", "impute", "imputed", "imputes", "imputing", "in", "inc", "include", "included",
    "includes", "including", "increase", "increased", "increases", "increasing", "increment",
    "incremental", "increments", "indeed", "independent", "index", "indexes", "infer",
    "infered", "infering", "infers", "info", "information", "informations", "infos", "init",
    "initial", "initialize", "initialized", "initializes", "initializing", "inject", "injected",
    "injecting", "injects", "inline", "inner", "input", "inputs", "insert", "inserted",
    "inserting", "inserts", "inspect", "inspected", "inspecting", "inspects", "install",
    "installed", "installing", "installs", "instance", "instances", "instantiate",
    "instantiated", "instantiates", "instantiating", "int", "integer", "integers", "integrate",
    "integrated", "integrates", "integrating", "interactive", "intercept", "intercepts",
    "interest", "interesting", "interface", "interfaces", "internal", "interpolate",
    "interpolated", "interpolates", "interpolating", "interval", "intervals", "into", "invalid",
    "invariant", "inverse", "inverses", "invert", "inverted", "inverting", "inverts", "invoke",
    "invoked", "invokes", "invoking", "is", "isnull", "isolated", "issue", "issues", "it",
    "item", "items", "iterate", "iterated", "iterates", "iterating", "iteration", "iterations",
    "its", "itself", "job", "jobs", "join", "joined", "joining", "joins", "joint", "json",
    "jsons", "jupyter", "just", "keep", "keeped", "keeping", "keeps", "kept", "keras", "kernel",
    "kernels", "key", "keys", "keyword", "keywords", "kind", "kinds", "knew", "know",
    "knowledge", "knowledges", "known", "kwargs", "label", "labeled", "labeling", "labels",
    "lambda", "lambdas", "language", "languages", "large", "larger", "largest", "last", "late",
    "latest", "latter", "latterly", "layer", "layers", "layout", "layouts", "lazy", "leading",
    "leak", "leaks", "learn", "learned", "learner", "learners", "learning", "learns", "least",
    "left", "legend", "legends", "len", "length", "lengths", "less", "let", "lets", "letter",
    "letters", "level", "levels", "libraries", "library", "license", "licenses", "life",
    "lifes", "lifetime", "lifetimes", "light", "like", "likely", "limit", "limited", "limiting",
    "limits", "line", "linear", "lineplot", "lines", "link", "linked", "linking", "links",
    "list", "listed", "listing", "lists", "literal", "literals", "little", "load", "loaded",
    "loading", "loads", "local", "locate", "located", "locates", "locating", "location",
    "locations", "log", "logged", "logger", "loggers", "logging", "logic", "logical", "logics",
    "logistic", "logs", "long", "longer", "look", "looked", "looking", "looks", "loop",
    "looped", "looping", "loops", "loose", "loss", "losses", "loud", "low", "lower", "lowered",
    "lowering", "lowers", "lowest", "ltd", "machine", "machines", "made", "magnitude",
    "magnitudes", "main", "major", "make", "makes", "making", "manager", "managers", "manifold",
    "manifolds", "manual", "many", "map", "mapped", "mapping", "maps", "margin", "marginal",
    "margins", "mark", "marked", "marker", "markers", "marking", "marks", "mask", "masked",
    "masking", "masks", "match", "matched", "matches", "matching", "matplotlib", "matrix",
    "matrixes", "max", "maximal", "maximum", "maximums", "may", "maybe", "me", "mean", "means",
    "meanwhile", "measure", "measured", "measures", "measuring", "median", "medians", "medium",
    "melt", "member", "members", "memories", "memory", "merge", "merged", "merges", "merging",
    "message", "messages", "metadata", "metadatas", "method", "methods", "metric", "metrics",
    "middle", "might", "mill", "min", "mine", "minimal", "minimize", "minimized", "minimizes",
    "minimizing", "minimum", "minimums", "minor", "minute", "minutes", "misc", "missing",
    "mistake", "mistakes", "mix", "mixed", "mixes", "mixing", "mode", "model", "modeled",
    "modeling", "models", "moderate", "modern", "modes", "modified", "modifies", "modify",
    "modifying", "module", "modules", "moment", "moments", "money", "moneys", "monitor",
    "monitored", "monitoring", "monitors", "month", "monthly", "months", "more", "moreover",
    "most", "mostly", "move", "moved", "moves", "movie", "movies", "moving", "msg", "much",
    "multiple", "multiplied", "multiplies", "multiply", "multiplying", "must", "mutual", "my",
    "myself", "naive", "name", "namely", "names", "nan", "narrow", "native", "natural", "nb",
    "nearby", "nearest", "necessary", "need", "needed", "needing", "needs", "negative",
    "neither", "nested", "network", "networks", "neuron", "neurons", "never", "nevertheless",
    "new", "next", "nice", "nine", "ninth", "no", "nobody", "node", "nodes", "noise", "noises",
    "noisy", "nominal", "none", "noone", "nor", "norm", "normal", "normalize", "normalized",
    "normalizes", "normalizing", "norms", "not", "notable", "note", "notebook", "notebooks",
    "noted", "notes", "nothing", "notice", "noticed", "notices", "noticing", "noting",
    "notnull", "now", "nowhere", "null", "num", "number", "numbers", "numeric", "numerical",
    "numpy", "nunique", "obj", "object", "objects", "observation", "observations", "observed",
    "obtain", "obtained", "obtaining", "obtains", "odd", "of", "off", "official", "offset",
    "offsets", "often", "ok", "okay", "old", "on", "once", "one", "only", "onto", "open",
    "opened", "opening", "opens", "operation", "operations", "operator", "operators", "optimal",
    "optimize", "optimized", "optimizer", "optimizers", "optimizes", "optimizing", "option",
    "optional", "options", "or", "orange", "order", "ordered", "ordering", "orders", "ordinal",
    "ordinary", "origin", "original", "origins", "orthogonal", "other", "others", "otherwise",
    "our", "ours", "ourselves", "out", "outcome", "outcomes", "outer", "outlier", "outliers",
    "output", "outputed", "outputing", "outputs", "over", "overall", "overfit", "overfited",
    "overfiting", "overfits", "override", "overrided", "overrides", "overriding", "overview",
    "overviews", "own", "pack", "packed", "packet", "packets", "packing", "packs", "pad",
    "padded", "padding", "pads", "page", "pages", "pair", "pairs", "pandas", "pandases",
    "panel", "panels", "paper", "papers", "paragraph", "paragraphs", "parallel", "parameter",
    "parameters", "parent", "parents", "parse", "parsed", "parses", "parsing", "part",
    "partial", "particular", "partition", "partitioned", "partitioning", "partitions", "parts",
    "pass", "passed", "passes", "passing", "password", "passwords", "past", "paste", "pasted",
    "pastes", "pasting", "patch", "patches", "path", "paths", "pattern", "patterns", "peak",
    "peaks", "people", "peoples", "per", "percent", "percentage", "percentages", "percents",
    "perfect", "perform", "performance", "performances", "performed", "performing", "performs",
    "perhaps", "period", "periodic", "periods", "persistent", "person", "personal", "persons",
    "phase", "phases", "phrase", "phrases", "physical", "pick", "picked", "picking", "picks",
    "picture", "pictures", "piece", "pieces", "pipeline", "pipelines", "pivot", "pivoted",
    "pivoting", "pivots", "pixel", "pixels", "place", "placed", "places", "placing", "plain",
    "plan", "plane", "planes", "plans", "platform", "platforms", "player", "players", "please",
    "plot", "plots", "plotted", "plotting", "point", "pointer", "pointers", "points",
    "policies", "policy", "polynomial", "poor", "popular", "population", "populations",
    "position", "positions", "positive", "possible", "power", "powers", "practical", "precise",
    "precision", "precisions", "predict", "predicted", "predicting", "prediction",
    "predictions", "predicts", "prefix", "prefixes", "preliminary", "prepare", "prepared",
    "prepares", "preparing", "preprocess", "preprocessed", "preprocesses", "preprocessing",
    "present", "pretty", "preview", "previews", "previous", "price", "prices", "primary",
    "print", "printed", "printing", "prints", "prior", "private", "probabilities",
    "probability", "probable", "problem", "problems", "procedure", "procedures", "process",
    "processed", "processes", "processing", "produce", "produced", "produces", "producing",
    "product", "products", "professional", "profile", "profiles", "program", "programs",
    "progress", "progresses", "project", "projected", "projecting", "projects", "prop",
    "proper", "properties", "property", "proportion", "proportions", "prune", "pruned",
    "prunes", "pruning", "ptr", "public", "pull", "pulled", "pulling", "pulls", "pure", "push",
    "pushed", "pushes", "pushing", "put", "pyplot", "python", "pythons", "pytorch", "quadratic",
    "qualities", "quality", "quantities", "quantity", "quarter", "quarterly", "quarters",
    "queried", "queries", "query", "querying", "question", "questions", "queue", "queues",
    "quick", "quiet", "radius", "radiuses", "ran", "random", "randoms", "range", "ranges",
    "rank", "ranked", "ranking", "ranks", "rare", "rate", "rates", "rather", "ratio", "ratios",
    "raw", "re", "read", "readed", "reader", "readers", "reading", "reads", "ready", "real",
    "really", "reason", "reasonable", "reasons", "rebuild", "rebuilded", "rebuilding",
    "rebuilds", "recall", "recalled", "recalling", "recalls", "recent", "recipe", "recipes",
    "recompute", "recomputed", "recomputes", "recomputing", "record", "recorded", "recording",
    "records", "rectangular", "recurrence", "recurrences", "recursive", "red", "reduce",
    "reduced", "reduces", "reducing", "redundant", "ref", "refer", "refered", "reference",
    "references", "refering", "refers", "refine", "refined", "refines", "refining", "reflect",
    "reflected", "reflecting", "reflects", "regex", "region", "regions", "regression",
    "regressions", "regressor", "regressors", "regular", "relation", "relations",
    "relationship", "relationships", "relative", "relevant", "reliable", "reload", "reloaded",
    "reloading", "reloads", "remain", "remained", "remaining", "remains", "remote", "remove",
    "removed", "removes", "removing", "rename", "renamed", "renames", "renaming", "render",
    "rendered", "rendering", "renders", "repeat", "repeated", "repeating", "repeats", "replace",
    "replaced", "replaces", "replacing", "report", "reported", "reporting", "reports",
    "repositories", "repository", "representative", "req", "request", "requests", "require",
    "required", "requires", "requiring", "res", "resample", "resampled", "resamples",
    "resampling", "rescale", "rescaled", "rescales", "rescaling", "research", "researches",
    "reset", "reseted", "reseting", "resets", "reshape", "reshaped", "reshapes", "reshaping",
    "residual", "residuals", "resize", "resized", "resizes", "resizing", "resolution",
    "resolutions", "resolve", "resolved", "resolves", "resolving", "resource", "resources",
    "resp", "response", "responses", "rest", "restore", "restored", "restores", "restoring",
    "rests", "result", "results", "retain", "retained", "retaining", "retains", "retrieve",
    "retrieved", "retrieves", "retrieving", "return", "returned", "returning", "returns",
    "reverse", "reversed", "reverses", "reversing", "review", "reviewed", "reviewing",
    "reviews", "reward", "rewards", "rich", "right", "rights", "robust", "roc", "rocs", "role",
    "roles", "rolling", "root", "roots", "rotate", "rotated", "rotates", "rotating", "rough",
    "round", "rounded", "rounding", "rounds", "route", "routes", "row", "rows", "rule", "rules",
    "run", "runned", "running", "runs", "runtime", "runtimes", "safe", "said", "salaries",
    "salary", "same", "sample", "sampled", "samples", "sampling", "save", "saved", "saves",
    "saving", "saw", "say", "scale", "scaled", "scales", "scaling", "scan", "scanned",
    "scanning", "scans", "scatter", "scatters", "scenario", "scenarios", "schema", "schemas",
    "school", "schools", "science", "sciences", "scientific", "scientist", "scientists",
    "scikit", "scipy", "score", "scored", "scores", "scoring", "screen", "screens", "script",
    "scripts", "seaborn", "search", "searched", "searches", "searching", "season", "seasonal",
    "seasons", "second", "secondary", "seconds", "section", "sections", "sector", "sectors",
    "secure", "see", "seed", "seeded", "seeding", "seeds", "seem", "seemed", "seeming", "seems",
    "seen", "segment", "segments", "select", "selected", "selecting", "selection", "selections",
    "selects", "send", "sended", "sending", "sends", "sensible", "sensitive", "sentence",
    "sentences", "separate", "separated", "separates", "separating", "sequence", "sequences",
    "sequential", "serialize", "serialized", "serializes", "serializing", "series", "serieses",
    "serious", "server", "servers", "service", "services", "session", "sessions", "set", "sets",
    "setted", "setting", "setup", "setuped", "setuping", "setups", "seventh", "several",
    "shallow", "shape", "shapes", "sharp", "she", "sheet", "sheets", "shell", "shells", "shift",
    "shifted", "shifting", "shifts", "short", "shorter", "should", "show", "shuffle",
    "shuffled", "shuffles", "shuffling", "side", "signal", "signals", "significant", "similar",
    "simple", "simulate", "simulated", "simulates", "simulating", "simultaneous", "since",
    "sincere", "single", "site", "sites", "six", "sixth", "sixty", "size", "sizes", "skew",
    "skews", "skip", "skipped", "skipping", "skips", "sklearn", "slice", "sliced", "slices",
    "slicing", "slope", "slopes", "slow", "small", "smaller", "smallest", "smart", "smooth",
    "smoothed", "smoothing", "smooths", "snapshot", "snapshots", "so", "soft", "software",
    "softwares", "solid", "solution", "solutions", "solve", "solved", "solves", "solving",
    "some", "somehow", "someone", "something", "sometime", "sometimes", "somewhere", "soon",
    "sort", "sorted", "sorting", "sorts", "source", "sources", "space", "spaces", "sparse",
    "spatial", "special", "specific", "specified", "specifies", "specify", "specifying",
    "spectrum", "spectrums", "speed", "speeds", "spike", "spikes", "split", "splits",
    "splitted", "splitting", "sporadic", "spread", "spreads", "sql", "square", "squares", "src",
    "stable", "stack", "stacked", "stacking", "stacks", "stage", "stages", "standalone",
    "standard", "standardize", "standardized", "standardizes", "standardizing", "standards",
    "start", "started", "starting", "starts", "state", "statement", "statements", "states",
    "static", "station", "stationary", "stations", "statistic", "statistical", "statistics",
    "stats", "statses", "status", "statuses", "stddev", "stdev", "steady", "steep", "step",
    "steps", "sticky", "still", "stock", "stocks", "stop", "stopped", "stopping", "stops",
    "storage", "storages", "store", "stored", "stores", "stories", "storing", "story", "str",
    "straight", "strange", "strategies", "strategy", "stream", "streamed", "streaming",
    "streams", "strict", "string", "strings", "strip", "striped", "striping", "strips",
    "strong", "structure", "structured", "structures", "student", "students", "style", "styled",
    "styles", "styling", "subject", "subjects", "submit", "submits", "submitted", "submitting",
    "subplot", "subplots", "subsequent", "subset", "subseted", "subseting", "subsets",
    "substring", "substrings", "subtle", "subtract", "subtracted", "subtracting", "subtracts",
    "such", "sufficient", "suffix", "suffixes", "suitable", "sum", "summaries", "summarize",
    "summarized", "summarizes", "summarizing", "summary", "summed", "summing", "sums", "sunny",
    "support", "supported", "supporting", "supports", "sure", "surface", "surfaces", "survey",
    "surveys", "swap", "swapped", "swapping", "swaps", "symbol", "symbols", "symmetric", "sync",
    "synced", "syncing", "syncs", "syntax", "syntaxes", "synthetic", "system", "table",
    "tables", "tag", "tagged", "tagging", "tags", "tail", "take", "taked", "taken", "takes",
    "taking", "target", "targets", "task", "tasks", "team", "teams", "temp", "temperature",
    "temperatures", "template", "templates", "temporal", "temporary", "ten", "tensor",
    "tensorflow", "tensors", "tenth", "term", "terminal", "terminate", "terminated",
    "terminates", "terminating", "terms", "test", "tested", "testing", "tests", "text", "texts",
    "than", "that", "the", "their", "them", "theme", "themes", "themselves", "then", "thence",
    "theories", "theory", "there", "thereafter", "thereby", "therefore", "therein", "thereupon",
    "these", "they", "thick", "thin", "thing", "things", "third", "this", "those", "though",
    "thought", "three", "threshold", "thresholds", "through", "throughout", "thru", "thus",
    "tick", "ticker", "tickers", "ticks", "time", "timed", "times", "timestamp", "timestamps",
    "timezone", "timezones", "timing", "tiny", "title", "titles", "tmp", "to", "today", "todo",
    "together", "token", "tokenize", "tokenized", "tokenizes", "tokenizing", "tokens", "tolist",
    "too", "took", "tool", "tools", "top", "topic", "topics", "total", "totals", "tough",
    "toward", "towards", "trace", "traces", "track", "tracked", "tracking", "tracks", "trade",
    "trades", "traffic", "traffics", "train", "trained", "training", "trainings", "trains",
    "transaction", "transactions", "transform", "transformation", "transformations",
    "transformed", "transforming", "transforms", "translate", "translated", "translates",
    "translating", "transparent", "transpose", "transposed", "transposes", "transposing",
    "tree", "trees", "trend", "trends", "trial", "trials", "tried", "tries", "true", "truncate",
    "truncated", "truncates", "truncating", "try", "trying", "tsv", "tune", "tuned", "tunes",
    "tuning", "tuple", "tuples", "twelve", "twenty", "two", "type", "types", "typical",
    "unbalanced", "unbiased", "under", "uniform", "union", "unions", "unique", "unit", "units",
    "universal", "unknown", "unless", "unlikely", "unpack", "unpacked", "unpacking", "unpacks",
    "unsigned", "unstable", "until", "untrained", "unused", "unzip", "unziped", "unziping",
    "unzips", "up", "update", "updated", "updates", "updating", "upload", "uploaded",
    "uploading", "uploads", "upon", "upper", "urban", "url", "urls", "us", "use", "used",
    "useful", "useless", "user", "users", "uses", "using", "usual", "util", "utilities",
    "utility", "utils", "val", "valid", "validate", "validated", "validates", "validating",
    "validation", "validations", "value", "values", "var", "variable", "variables", "variance",
    "variances", "various", "vector", "vectors", "verbose", "verboses", "verified", "verifies",
    "verify", "verifying", "version", "versions", "vertical", "very", "via", "viable", "video",
    "videos", "view", "viewed", "viewing", "views", "virtual", "visible", "visual",
    "visualization", "visualizations", "visualize", "visualized", "visualizes", "visualizing",
    "vocabularies", "vocabulary", "voice", "voices", "volume", "volumes", "vs", "wait",
    "waited", "waiting", "waits", "walk", "walked", "walking", "walks", "want", "wanted",
    "wanting", "wants", "warm", "warn", "warned", "warning", "warns", "was", "watch", "watched",
    "watches", "watching", "wave", "waves", "way", "we", "weak", "web", "webs", "website",
    "websites", "week", "weekday", "weekdays", "weekly", "weeks", "weight", "weighted",
    "weighting", "weights", "weird", "well", "went", "were", "what", "whatever", "wheel",
    "wheels", "when", "whence", "whenever", "where", "whereafter", "whereas", "whereby",
    "wherein", "whereupon", "wherever", "whether", "which", "while", "white", "whither", "who",
    "whoever", "whole", "whom", "whose", "why", "wide", "wider", "width", "widths", "wild",
    "will", "window", "windows", "wise", "with", "within", "without", "won", "word", "words",
    "work", "worked", "worker", "workers", "workflow", "workflows", "working", "works",
    "workspace", "workspaces", "world", "worlds", "would", "wrap", "wrapped", "wrapping",
    "wraps", "write", "writed", "writes", "writing", "wrong", "wrote", "xlabel", "xticks",
    "year", "yearly", "years", "yellow", "yes", "yet", "ylabel", "you", "young", "your",
    "yours", "yourself", "yourselves", "yticks", "zero", "zeros", "zip", "zipped", "zipping",
    "zips", "zone", "zones", "zoom", "zoomed", "zooming", "zooms",
};

} // namespace nlgp::detail
