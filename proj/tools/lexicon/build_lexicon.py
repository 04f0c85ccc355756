#!/usr/bin/env python3
# Copyright 2026 The corpsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates core/data/lexicon.tsv from the word lists below.

Each word gets the single tag it most often carries in expository English.
Inflected forms are derived with regular rules; irregular forms are listed
explicitly. Where two lists produce the same surface form, PRIORITY decides,
and OVERRIDES has the last word.

Usage: build_lexicon.py [output.tsv]
"""

import sys
from pathlib import Path

# ---------------------------------------------------------------------------
# Closed classes.

CLOSED = {
    "DT": """the a an this that these those all some any each every no another
             either neither both half""",
    "IN": """of in on at by for with from into onto upon about above across after
             against along among amongst around as before behind below beneath
             beside besides between beyond during except inside like near off
             outside over past per since than through throughout toward towards
             under underneath unlike until till via within without whether
             because although though while if unless whereas once despite
             regarding concerning amid versus""",
    "CC": "and or but nor plus",
    "PRP": """i you he she it we they me him us them itself themselves himself
              herself myself ourselves yourself yourselves one's""",
    "MD": "can could may might must shall should will would ought cannot",
    "WRB": "where when why how wherever whenever whereby",
    "RB": """not n't also very too so only just even still already always often
             never sometimes usually then here now thus hence therefore however
             moreover furthermore instead rather quite almost nearly again ever
             else yet perhaps indeed simply generally typically mostly largely
             merely nevertheless nonetheless otherwise meanwhile afterwards
             together apart away back forward forth later soon once twice
             seldom rarely frequently fairly relatively approximately roughly
             exactly directly entirely completely fully partly partially highly
             greatly slightly especially particularly namely respectively
             likewise accordingly consequently alternatively additionally
             eventually finally initially originally previously subsequently
             currently recently immediately gradually rapidly quickly slowly
             easily hardly barely almost enough somewhat upward downward
             outward inward elsewhere anywhere everywhere somewhere nowhere
             first secondly thirdly lastly""",
    "CD": """zero one two three four five six seven eight nine ten eleven twelve
             thirteen fourteen fifteen sixteen seventeen eighteen nineteen
             twenty thirty forty fifty sixty seventy eighty ninety hundred
             thousand million billion dozen""",
    # Tags outside the closed tagset (TO, EX, WDT, WP, PRP$, PDT, UH, ...).
    "X": """to there which what whatever whichever who whom whose whoever his
            her its their our my your theirs ours mine yours hers oh yes
            please""",
}

# ---------------------------------------------------------------------------
# Open classes.

NOUNS = """
ability absence absorption acceleration access account accumulator accuracy
acid act action activity adapter addition address adjustment advantage age
agent agreement aid air aircraft alarm algebra algorithm alloy alternation
alternator aluminum ammeter amount amp ampere amperage amplifier amplitude
analogy analysis angle animal answer antenna anode apparatus appliance
application approach approximation arc area argument arm arrangement array
arrow article aspect assembly assumption atmosphere atom attention attraction
audience author automobile average axis back background balance ball band
bandwidth bank bar barrier base basis battery beam bearing behavior bell belt
benefit bias bit blade block board body bolt bond book boost bottom boundary
box brain branch breadth breakdown breaker bridge brightness brush buffer
building bulb bundle burden bus button cable calculation calculator
calibration call capability capacitance capacitor capacity car carbon card
care carrier case cathode cause cell center centimeter century chain chamber
chance change channel chapter character characteristic charge charger chart
check chemical chemistry child chip choice circuit circuitry circumference
city class clip clock coefficient coil collection column combination
comparison compass complexity component composition compound computer concept
conclusion condition conductance conduction conductivity conductor connection
connector consequence conservation consideration constant construction
consumer consumption contact content context continuity contrast control
controller convention conversion converter copper core corner correction
cost coulomb count country couple coupling course cover crystal cup current
curve customer cycle damage data day decade decrease definition degree
delay delta demand density department dependence depth derivation design
detail detection detector determinant development device diagram diameter
dielectric difference diode direction discharge discovery discussion disk
display distance distribution divider document domain door dot drawing drift
drive driver drop duration duty dynamo earth edge effect efficiency effort
electricity electrode electrolyte electromagnet electron electronics element
emf emitter end energy engine engineer engineering entry environment equation
equilibrium equipment equivalent error example exception excess exchange
existence expansion experiment explanation exponent expression extension
extent fact factor failure family farad fault feature feedback field figure
filament file filter flash flow flux focus foil force form formula fraction
frame frequency friction front fuel function fuse gain galvanometer gap gas
gauge generator geometry glass goal gold grade gram graph gravity grid
ground group growth guide half hand harm head heat heater height help henry
hertz history hole home hour house hydrogen idea identity image impedance
importance increase inductance induction inductor industry inequality
inertia information input instance instrument insulation insulator integer
intensity interaction interest interface interval introduction inverter iron
isolation issue item joule junction key kilogram kilometer kilowatt kind
knowledge lab laboratory lack lamp language laptop law layer lead leakage
length lens lesson level lever life light lightning limit line link liquid
list load location logic loop loss lot machine magnet magnetism magnitude
majority manner manufacturer map margin mass material mathematics matter
maximum meaning means measure measurement mechanism medium member memory
meter method metal microphone middle mile milliampere millimeter minimum
minute mistake mode model module moment momentum month motion motor movement
multimeter multiplier name nature need negative network neutron node noise
norm notation note notion number object observation occasion ohm ohmmeter
operation operator opposition option order orientation origin oscillation
oscillator outlet output oven overload owner oxygen pack package page pair
panel paper parallel parameter part particle path pattern peak pen percent
percentage performance period person phase phenomenon photon physics
physicist picture piece pin pipe place plane plant plastic plate plug point
polarity pole polygon portion position positive possibility potential
potentiometer power practice precision presence pressure principle probe
problem procedure process product production program progress property
proportion protection proton purpose quality quantity question radiation
radio radius range rate ratio reactance reaction reader reading reality
reason receiver record rectifier reduction reference region regulation
regulator relation relationship relay reliability remainder repair
representation requirement research resistance resistivity resistor
resonance resource response rest result return rheostat ring rise risk rod
role room rotation rule safety sample scale schematic school science
scientist screen second section sector segment selection semiconductor
sensor sentence separation sequence series service set setting shape share
shock short side sign signal silicon silver simulation sine site situation
size socket software solar solenoid solution solver source space speaker
speed sphere spring square stage standard start state statement station
step storage strength stress string structure student study subject
substance substitution success sum summary supply support surface surge
switch symbol system table tank target task teacher technique technology
temperature tension term terminal test text theorem theory thermistor
thermometer thickness thing threshold time tolerance tool top topic torque
total transfer transformer transistor transmission treatment trial trip
tube turn type unit universe usage use user vacuum valence value valve
variable variation vector vehicle velocity version view voltage voltmeter
volt volume water watt wattage wave waveform wavelength way weight wheel
whole width winding wire wiring word work world year zone
""".split()

IRREGULAR_PLURALS = {
    "analysis": "analyses", "apparatus": "apparatus", "axis": "axes",
    "basis": "bases", "child": "children", "criterion": "criteria",
    "datum": "data", "foot": "feet", "half": "halves", "hypothesis":
    "hypotheses", "index": "indices", "leaf": "leaves", "life": "lives",
    "man": "men", "matrix": "matrices", "means": "means", "medium": "media",
    "mouse": "mice", "person": "people", "phenomenon": "phenomena",
    "series": "series", "shelf": "shelves", "thesis": "theses", "tooth":
    "teeth", "vertex": "vertices", "woman": "women", "knife": "knives",
}
# Nouns that are usually uncountable or already plural in form.
NO_PLURAL = set("""
absorption access air aluminum behavior carbon chemistry circuitry
conduction conductivity copper data electricity electronics engineering
equipment evidence feedback friction gold gravity hydrogen inertia
information insulation iron knowledge leakage lightning magnetism
mathematics momentum oxygen physics research safety silicon silver software
vacuum water wiring emf means series
""".split())

ADJECTIVES = """
able absolute abstract accurate active actual additional adequate
adjacent advanced alternating ambient analog ancient annual apparent
applicable appropriate approximate arbitrary artificial atomic automatic
available average bad basic beneficial big binary bipolar black blue brief
bright broad brown capable careful central certain cheap chemical
circular classical clean clear close closed cold common comparable
compatible complete complex comprehensive conductive consistent constant
continuous conventional cool correct corresponding critical cubic
cumulative dangerous dark dead deep definite dense dependent desirable
detailed different difficult digital direct discrete distinct domestic
double dry due dynamic early easy economic effective efficient elastic
electric electrical electromagnetic electronic electrostatic elementary
empty entire equal equivalent essential exact excessive existing expensive
experimental external extreme faint false familiar far fast favorable
final fine finite first fixed flat flexible following free frequent full
fundamental future general geometric given global good gradual great
green grounded hard harmful heavy high horizontal hot huge ideal identical
immediate important impossible incandescent independent individual
industrial inefficient infinite initial inner instantaneous instant
insulated intense interesting internal inverse large last late lateral
leading left light likely linear liquid little live local logical long
loose loud low magnetic main major many marginal mathematical maximum
mechanical metallic microscopic minimal minimum minor mobile moderate
modern molecular much multiple mutual narrow national natural near
necessary negative net neutral new next nice nominal normal nuclear
numerical objective obvious old open opposite optical optimal ordinary
original other outer overall own parallel particular passive perfect
permanent physical plain portable positive possible potential powerful
practical precise present previous primary prime principal proper
proportional public pure quick radial random rapid rare ready real
realistic reasonable recent rectangular red regular relative reliable
remote resistive reverse right rigid round safe same scientific secondary
sensitive separate serious several severe sharp short significant silent
similar simple single slow small smooth soft solar solid sophisticated
special specific square stable standard static steady steep straight
strange strict strong structural subsequent substantial sudden sufficient
suitable superior symmetrical technical temporary terminal theoretical
thermal thick thin tiny top total toxic traditional transient transparent
true typical ultimate unable uniform unique universal unknown unstable
unusual upper useful usual valid variable various vast vertical visible
vital warm weak wet white whole wide wrong yellow young zero few such
""".split()

COMPARATIVES = {
    "JJ": """better best worse worst less least more most greater greatest
             higher highest lower lowest larger largest smaller smallest longer
             longest shorter shortest stronger strongest weaker weakest faster
             fastest slower slowest easier easiest simpler simplest""",
}

# Regular verbs: base forms. Inflections come from the rules in inflect().
VERBS = """
absorb accept access accomplish account accumulate achieve acquire act
activate adapt add adjust affect agree aim allow alter alternate amplify
analyze answer appear apply approach approximate argue arrange arrive
assemble assign assist associate assume attach attempt attract avoid balance
base behave believe belong benefit block boost borrow break calculate
calibrate call carry cause change charge check choose circulate claim
classify close collect combine compare compensate complete compute
concentrate conclude conduct confirm connect consider consist constitute
construct consume contain continue contribute control convert cool correct
correspond count couple cover create cross damage decide declare decrease
define deliver demonstrate denote depend derive describe design destroy
detect determine develop deviate differ dim diminish disconnect discover
discuss display dissipate distinguish distribute divide double draw drive
drop ease emit employ enable encounter end enhance ensure enter equal
establish estimate evaluate examine exceed exchange exhibit exist expand
expect experience explain explore expose express extend fail fall feed fill
find fix flow follow force form function generate give govern ground grow
guarantee handle happen heat help hold identify ignore illustrate imagine
implement imply improve include increase indicate induce influence inform
insert install insulate integrate intend interact interpret introduce
invent investigate involve isolate join keep know label lack last lead
learn leave lie light limit link list locate look lose maintain make
manage manipulate match mean measure meet mention minimize model modify
monitor mount move multiply name need neglect note notice observe obtain
occur offer open operate oppose order oscillate overcome pass perform permit
pick place plot plug point possess power predict prefer prepare present
preserve prevent produce prohibit protect prove provide pull pump push
put raise reach read realize recall receive recharge recognize record
rectify reduce refer reflect regard regulate reject relate release rely
remain remember remove repeat replace represent repel require resist
respond rest restrict result retain return reveal reverse rise rotate run
satisfy save say see seem select send sense separate serve set share shift
show simplify simulate solve specify spend split stabilize start state
step stop store study substitute subtract suffer suggest sum supply
support suppose surround sustain switch take tend test think total touch
transfer transform translate transmit travel treat trip try turn understand
undergo use utilize vary verify view vibrate want warn waste wind work
write yield
""".split()

# General vocabulary outside the circuit domain, so ordinary prose tags well.
EXTRA_VERBS = """
abandon accelerate accompany accuse adopt advance advise afford alarm
alert allocate amaze amuse announce annoy anticipate apologize appeal
appoint appreciate approve assert assess attend authorize bake ban bathe
beg blame bless boil bomb bore bother bounce bow brake breathe brush
bump burn bury calm camp cancel capture care celebrate chase cheat cheer
chew chop clap clean clear climb coach collapse comfort command comment
commit communicate compete complain compose concern confess confuse
congratulate conserve consult continue convince cook copy cough crack
crash crawl criticize crush cry cure curl cycle dance dare deceive
decorate dedicate delay delight demand deny deposit deserve desire drain
dress drift drown dump dust earn educate elect embrace emerge emphasize
encourage endure enjoy entertain escape examine excite excuse exercise
expire explode extract face fade fasten fear fetch file film fire flash
float flood fold fool frighten fry gather gaze glow glue grab grant grate
greet grin grip guard guess guide hammer hang harm hate haunt head heal
heap hook hop hope hover hug hum hunt hurry imitate impress inspect
inspire instruct interrupt invite irritate itch jail jam jog joke judge
juggle jump kick kill kiss kneel knit knock land laugh launch lift like
listen live load lock love lower manufacture march mark marry melt mend
milk miss mix moan mourn murder nail negotiate nest nod number obey
object occupy offend own pack paddle paint park pat pause pedal peel
phone pinch plan plant play please poke polish pop post pour practice
pray preach pretend print proceed process promise propose publish punch
punish purchase question queue race rain recommend recover reign rejoice
relax relieve remind rent repair reply report rescue retire rhyme rinse
risk rob rock roll rub ruin rule rush sack sail scare scatter scold
scorch scrape scratch scream screw scribble seal search settle shave
shelter shiver shock shop shrug sigh sign signal sin sip ski skip slap
slip slow smash smell smile smoke snatch sneeze sniff snore snow soak
sound spare spark spell spill spoil spray sprout squash squeak squeal
squeeze stain stamp stare steer stir stitch strap stretch strip stuff
subscribe succeed suck suit surprise suspect suspend swap sway switch
talk tame tap taste tease telephone tempt terrify thank thaw tick tickle
tie time tip tire tour tow trace trade train trap tremble trust tug
type unite unlock unpack vanish visit wail wait walk wander warm wash
watch water wave weigh welcome whine whip whirl whisper whistle wink
wipe wish wobble wonder worry wrap wreck wrestle wriggle yawn yell zip
""".split()

EXTRA_NOUNS = """
account act action activity actor address adult advantage advice age
agency agent agreement air airport alarm animal answer apartment apple
appointment argument arm army art article artist aspect attention
audience author autumn baby background bag ball band bank bar base
basket bath beach bean bear bed bedroom beef beer bell belt bench bicycle
bill bird birth birthday biscuit blood board boat body bone book boot
border bottle bottom boundary bowl box boy brain bread breakfast brick
bridge brother brush bucket budget building bus business butter button
cake camera camp candle candidate capital car card career carpet case
cash castle cat category ceiling centre century chain chair chairman
chance chapter character chicken child chocolate choice church cinema
city class classroom client climate clock cloth cloud club coach coast
coat code coffee coin college colour committee community company
competition computer concept concert condition confidence connection
context contract conversation cookie corner cost cotton council country
county couple course court cousin cow credit crew crime crisis crowd
culture cup customer cycle dad damage danger daughter day deal death debt
decade decision degree department desk detail dialogue diet difference
dinner direction director dirt discussion disease dish doctor dog door
dream dress drink driver drug duty ear economy editor education effort
egg election emotion employee employer end enemy engine entry
environment error event evidence exam example exercise experience expert
eye face fact factory family farm farmer father fear feature feeling
festival field figure film finger fire fish flat flight floor flower
fly food foot football forest fork fortune friend fruit fun future game
garage garden gate gift girl glass goal god gold government grade
grandfather grandmother grass group growth guest guide guitar gun hair
half hall hand hat head health heart height hero hill history hobby
holiday home homework hope horse hospital hotel hour housing husband
ice idea image impact income industry information insect instance
instrument insurance interest internet interview island issue item
jacket job joke journey judge juice key kid king kitchen knee knife lab
lady lake land language lawyer leader leaf lesson letter level library
life lift line lion lip list location lunch machine magazine manager
map market marriage match meal meat media medicine meeting member memory
message milk mind minute mirror mistake mom moment money monkey month
mood morning mother mountain mouse mouth movie mud museum music name
nation nature neck neighbour network news newspaper night nose note
novel number nurse object ocean offer office officer oil opinion
opportunity orange organization owner page pain painting pair pan
paper parent park party passenger passport patient pattern payment peace
pen pencil people period person phone photo piano picture piece pig
pilot pizza place plan plane planet plant plate player pocket poem poet
police policy politics pollution pool population position post pot
potato practice president pressure price prince prison prize problem
product profession professor profit project promise proposal public
purpose quality quantity queen question rabbit race radio rain range
reader reality reason recipe record region relation relationship
religion report republic request research restaurant result review rice
river road rock role roof room rule safety salad salary sale salt sand
scene school science score screen sea season seat secret secretary
sector security sense sentence service session shape share sheep shelf
ship shirt shoe shop shoulder side sign silver singer sister site
situation size skill skin sky sleep smile snow society sock software
soldier solution son song sort soul soup south space speaker speech
sport spring staff stage star station statement step stomach stone
store storm story strategy street stress structure student studio style
subject success sugar suggestion summer sun supermarket surface surgery
surprise sweater table tale task taste tax tea teacher team tear
technology telephone television tennis tent term test text theatre
theory thing thought ticket tiger title toe toilet tomato tongue tool
tooth top topic tourist town toy track trade tradition traffic train
training tree trip trouble truck truth tube university user vacation
valley vegetable vehicle version victim video view village violin visit
visitor voice volume war wall wallet water wave wealth weather website
wedding week weekend weight west wife window wine winner winter woman
wood word worker world writer year youth zone
""".split()

EXTRA_ADJECTIVES = """
able absent academic acceptable accurate active actual additional
adequate afraid aggressive alive alone amazing angry annual anxious
apparent appropriate asleep attractive automatic available aware awful
bad basic beautiful bitter blind blue boring brave brief bright brilliant
broad brown busy calm capable careful central certain cheap chief civil
classic clean clever close cold comfortable common competitive complex
confident conscious considerable consistent correct crazy creative
critical cultural curious dangerous dark dead dear deep democratic
dependent desperate different difficult digital dirty distinct domestic
dramatic dry due early eastern easy economic educational effective
efficient elderly emotional empty entire environmental equal essential
evil exact excellent existing expensive extreme fair false familiar
famous fancy fantastic fat favourite federal fine flat foreign formal
free fresh friendly full funny general gentle genuine global golden good
grand great green grey guilty happy hard healthy heavy helpful hidden
historical honest hot huge human hungry ideal illegal immediate important
impossible independent individual industrial informal innocent intense
interesting international jealous joint junior key kind large late
latter legal lonely loose loud lovely lucky mad main major male mass
massive mean medical medium mental mere middle mild military modern
moral narrow national native natural nearby neat necessary nervous new
nice noble normal northern novel obvious odd official old open opposite
ordinary original other overall own pale particular past patient perfect
permanent personal physical pink plastic pleasant polite political
poor popular possible powerful practical pregnant pretty previous
primary private probable professional proper proud public pure purple
quick quiet rare raw ready real reasonable recent red regular relevant
religious remote rich right rough royal rude sad safe scientific secret
senior sensitive separate serious severe sexual sharp silent silly
similar single slight slow small smart smooth social soft solid sorry
southern special specific spiritual stable steady strange strict
strong stupid successful sudden sufficient suitable super sure sweet
tall technical terrible thick thin tight tiny tired tough traditional
tropical true typical ugly unable unhappy unique unknown unusual upper
upset urban useful usual vast visible visual vital warm weak wealthy
weird western wet white whole wide wild wise wonderful wooden wrong
yellow young
""".split()


IRREGULAR_VERBS = [
    # base, past, past participle
    ("arise", "arose", "arisen"), ("become", "became", "become"),
    ("begin", "began", "begun"), ("bend", "bent", "bent"),
    ("bind", "bound", "bound"), ("blow", "blew", "blown"),
    ("break", "broke", "broken"), ("bring", "brought", "brought"),
    ("build", "built", "built"), ("burn", "burnt", "burnt"),
    ("buy", "bought", "bought"), ("catch", "caught", "caught"),
    ("choose", "chose", "chosen"), ("come", "came", "come"),
    ("cost", "cost", "cost"), ("cut", "cut", "cut"), ("deal", "dealt", "dealt"),
    ("draw", "drew", "drawn"), ("drive", "drove", "driven"),
    ("eat", "ate", "eaten"), ("fall", "fell", "fallen"),
    ("feed", "fed", "fed"), ("feel", "felt", "felt"),
    ("find", "found", "found"), ("fly", "flew", "flown"),
    ("forbid", "forbade", "forbidden"), ("forget", "forgot", "forgotten"),
    ("freeze", "froze", "frozen"), ("get", "got", "gotten"),
    ("give", "gave", "given"), ("go", "went", "gone"),
    ("grow", "grew", "grown"), ("hang", "hung", "hung"),
    ("hear", "heard", "heard"), ("hide", "hid", "hidden"),
    ("hit", "hit", "hit"), ("hold", "held", "held"), ("keep", "kept", "kept"),
    ("know", "knew", "known"), ("lay", "laid", "laid"), ("lead", "led", "led"),
    ("learn", "learnt", "learnt"), ("leave", "left", "left"),
    ("lend", "lent", "lent"), ("let", "let", "let"), ("lie", "lay", "lain"),
    ("lose", "lost", "lost"), ("make", "made", "made"),
    ("mean", "meant", "meant"), ("meet", "met", "met"),
    ("overcome", "overcame", "overcome"), ("pay", "paid", "paid"),
    ("put", "put", "put"), ("read", "read", "read"), ("ride", "rode", "ridden"),
    ("ring", "rang", "rung"), ("rise", "rose", "risen"), ("run", "ran", "run"),
    ("say", "said", "said"), ("see", "saw", "seen"), ("seek", "sought", "sought"),
    ("sell", "sold", "sold"), ("send", "sent", "sent"), ("set", "set", "set"),
    ("shake", "shook", "shaken"), ("shine", "shone", "shone"),
    ("shoot", "shot", "shot"), ("show", "showed", "shown"),
    ("shrink", "shrank", "shrunk"), ("shut", "shut", "shut"),
    ("sink", "sank", "sunk"), ("sit", "sat", "sat"), ("sleep", "slept", "slept"),
    ("slide", "slid", "slid"), ("speak", "spoke", "spoken"),
    ("spend", "spent", "spent"), ("spin", "spun", "spun"),
    ("split", "split", "split"), ("spread", "spread", "spread"),
    ("stand", "stood", "stood"), ("steal", "stole", "stolen"),
    ("stick", "stuck", "stuck"), ("strike", "struck", "struck"),
    ("swing", "swung", "swung"), ("take", "took", "taken"),
    ("teach", "taught", "taught"), ("tear", "tore", "torn"),
    ("tell", "told", "told"), ("think", "thought", "thought"),
    ("throw", "threw", "thrown"), ("understand", "understood", "understood"),
    ("undergo", "underwent", "undergone"), ("upset", "upset", "upset"),
    ("wear", "wore", "worn"), ("win", "won", "won"), ("wind", "wound", "wound"),
    ("withstand", "withstood", "withstood"), ("write", "wrote", "written"),
]

AUXILIARIES = {
    "be": "VB", "is": "VBZ", "are": "VBP", "am": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG", "'s": "VBZ", "'re": "VBP",
    "have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG", "'ve": "VBP",
    "do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
    "isn't": "VBZ", "aren't": "VBP", "wasn't": "VBD", "weren't": "VBD",
    "doesn't": "VBZ", "don't": "VBP", "didn't": "VBD", "hasn't": "VBZ",
    "haven't": "VBP", "can't": "MD", "won't": "MD", "wouldn't": "MD",
    "couldn't": "MD", "shouldn't": "MD", "it's": "PRP",
}

# Third-person forms that read as verbs far more often than as plurals.
VERB_S_FORMS = set("""
acts affects allows amplifies applies appears assumes becomes begins belongs
blocks boosts causes changes circulates comes connects consists contains
continues converts decreases defines delivers depends describes determines
differs dissipates divides doubles drives drops emits enables ensures equals
exists explains falls feeds flows follows gives goes governs grows happens
heats helps holds implies includes increases indicates induces involves
keeps knows leads limits lies looks makes means measures moves needs obeys
occurs offers opens operates opposes passes permits prevents produces
protects provides pushes reaches reduces refers relates remains represents
requires resists results returns rises runs says seems sends serves sets
shows splits starts states stays stops stores supplies takes tends travels
turns uses varies works yields carries
""".split())

# Base forms that read as verbs more often than as nouns.
VERB_BASE_FORMS = set("""
allow apply become begin connect consist contain convert depend describe
determine obtain occur provide reduce require
""".split())

OVERRIDES = {
    "constant": "JJ", "electric": "JJ", "such": "JJ", "that": "DT",
    "left": "VBN", "found": "VBD", "known": "VBN", "given": "VBN",
    "called": "VBN", "used": "VBN", "based": "VBN", "connected": "VBN",
    "shown": "VBN", "lost": "VBN", "made": "VBN", "set": "VBN",
    "light": "NN", "means": "NNS", "series": "NN", "parallel": "JJ",
    "each": "DT", "one": "CD", "first": "JJ", "like": "IN", "near": "IN",
    "round": "JJ", "rest": "NN", "lead": "NN", "wind": "NN", "second": "NN",
    "terminal": "NN", "potential": "NN", "standard": "JJ", "variable": "NN",
    "equivalent": "JJ", "positive": "JJ", "negative": "JJ", "live": "JJ",
    "short": "JJ", "square": "JJ", "present": "JJ", "total": "JJ",
    "minimum": "NN", "maximum": "NN", "average": "JJ", "chemical": "JJ",
    "solar": "JJ", "liquid": "NN", "zero": "CD", "ground": "NN",
    "once": "RB", "out": "RB", "up": "RB",
    "down": "RB", "about": "IN", "since": "IN", "before": "IN",
    "after": "IN", "data": "NNS", "more": "JJ", "most": "JJ", "less": "JJ",
    "kirchhoff": "NNP", "volta": "NNP", "faraday": "NNP", "edison": "NNP",
    "tesla": "NNP", "franklin": "NNP", "maxwell": "NNP", "ohm": "NN",
    "thevenin": "NNP", "norton": "NNP", "wheatstone": "NNP",
    "wikipedia": "NNP", "english": "NNP", "earth": "NN",
    "use": "VBP", "share": "VBP", "ohmic": "JJ", "thousands": "NNS",
    "hundreds": "NNS", "millions": "NNS",
}

# Lower number wins when generated forms collide.
PRIORITY = {"closed": 0, "aux": 0, "noun": 1, "adj": 2, "verb": 3, "derived": 4}


def pluralize(noun):
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2:-1] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def third_person(verb):
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    if verb.endswith("y") and verb[-2:-1] not in "aeiou":
        return verb[:-1] + "ies"
    return verb + "s"


DOUBLE_FINAL = set("""
drop dim stop plug ship step trip split shut set put cut hit let run begin
win spin refer transfer control occur permit prefer
""".split())


def past(verb):
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2:-1] not in "aeiou":
        return verb[:-1] + "ied"
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ed"
    return verb + "ed"


def gerund(verb):
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")):
        return verb[:-1] + "ing"
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ing"
    return verb + "ing"


def adverb(adj):
    if adj.endswith("ic") and adj not in ("public",):
        return adj + "ally"
    if adj.endswith("le") and len(adj) > 3:
        return adj[:-1] + "y"
    if adj.endswith("y") and len(adj) > 3:
        return adj[:-1] + "ily"
    if adj.endswith("ll"):
        return adj + "y"
    return adj + "ly"


def build():
    entries = {}

    def add(word, tag, source):
        word = word.lower()
        rank = PRIORITY[source]
        current = entries.get(word)
        if current is None or rank < current[1]:
            entries[word] = (tag, rank)

    for tag, words in CLOSED.items():
        for w in words.split():
            add(w, tag, "closed")
    for w, tag in AUXILIARIES.items():
        add(w, tag, "aux")

    for n in NOUNS:
        add(n, "NN", "noun")
        if n not in NO_PLURAL:
            add(pluralize(n), "NNS", "noun")
    for n in IRREGULAR_PLURALS.values():
        add(n, "NNS", "noun")

    for n in EXTRA_NOUNS:
        add(n, "NN", "noun")
        if n not in NO_PLURAL:
            add(pluralize(n), "NNS", "noun")

    for a in ADJECTIVES + EXTRA_ADJECTIVES:
        add(a, "JJ", "adj")
        if len(a) > 3 and a not in ("few", "many", "much", "such", "own", "due"):
            add(adverb(a), "RB", "derived")
    for tag, words in COMPARATIVES.items():
        for w in words.split():
            add(w, tag, "adj")

    irregular = {base: (p, pp) for base, p, pp in IRREGULAR_VERBS}
    for v in sorted(set(VERBS) | set(EXTRA_VERBS) | set(irregular)):
        add(v, "VB", "verb")
        add(third_person(v), "VBZ", "verb")
        add(gerund(v), "VBG", "verb")
        if v in irregular:
            p, pp = irregular[v]
            add(p, "VBD", "verb")
            if pp != p:
                add(pp, "VBN", "verb")
        else:
            add(past(v), "VBD", "verb")
        # Noun-like -ment/-tion derivations are handled by the suffix rules.

    for v in sorted(set(VERBS) | set(EXTRA_VERBS) | set(irregular)):
        s = third_person(v)
        if s in VERB_S_FORMS:
            entries[s] = ("VBZ", 0)
        if v in VERB_BASE_FORMS:
            entries[v] = ("VB", 0)
    for w, tag in OVERRIDES.items():
        entries[w] = (tag, 0)
    return {w: t for w, (t, _) in entries.items()}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parents[2] / "core" / "data" / "lexicon.tsv")
    entries = build()
    lines = ["# corpsum builtin lexicon: word<TAB>tag (lowercase keys).",
             "# Generated by tools/lexicon/build_lexicon.py; edit the lists there."]
    lines += [f"{w}\t{t}" for w, t in sorted(entries.items())]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {out}", file=sys.stderr)


if __name__ == "__main__":
    main()
