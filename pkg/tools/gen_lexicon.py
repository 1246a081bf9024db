#!/usr/bin/env python3
"""Generate the bundled word-polarity lexicon.

The lexicon is built from hand-curated lemma blocks, one polarity value
per block, expanded with regular inflections (plural, third person,
past, gerund, adverb, noun-of-quality) plus a curated un- prefix list
whose polarity flips. Derived forms inherit the lemma's polarity. The
output is deterministic: rerunning this script reproduces the committed
CSV byte for byte.

Usage: python tools/gen_lexicon.py [-o OUTPUT]
"""

from __future__ import annotations

import argparse
import csv
import re
import sys

VOWELS = set("aeiou")
WORD_RE = re.compile(r"^[a-z]+(?:'[a-z]+)?$")

# (polarity, space-separated lemmas)
ADJ_BLOCKS = [
    (1.0, "excellent perfect outstanding magnificent phenomenal superb exceptional flawless"),
    (0.9, "amazing awesome wonderful fantastic brilliant marvelous marvellous incredible spectacular terrific stellar glorious"),
    (0.8, """great delightful fabulous splendid remarkable extraordinary admirable impressive
             joyful joyous thrilled overjoyed ecstatic elated jubilant triumphant heroic
             beloved adorable gorgeous stunning breathtaking magical"""),
    (0.7, """good happy glad pleased cheerful delighted merry grateful thankful blessed
             lovely beautiful charming graceful radiant elegant optimistic hopeful confident
             proud excited exciting passionate devoted faithful generous noble honorable
             victorious successful prosperous flourishing thriving"""),
    (0.6, """nice fine pleasant enjoyable pleasing satisfying satisfied comfortable cozy
             encouraging encouraged reassuring reassured promising favorable favourable
             positive bright warm friendly kind gentle caring compassionate supportive
             helpful effective efficient reliable trustworthy honest sincere loyal brave
             courageous bold strong healthy fit safe secure stable calm peaceful serene
             relaxed content fresh pure clean sweet tender affectionate welcoming
             festive playful cheery sunny smiling grinning laughing"""),
    (0.5, """decent solid worthy capable competent smart clever wise talented gifted
             skilled skillful creative innovative inventive useful valuable beneficial
             productive fruitful lucky fortunate vibrant lively energetic enthusiastic
             eager keen motivated inspired inspiring uplifting refreshing rewarding
             memorable entertaining amusing funny witty humorous hilarious popular
             famous respected admired trusted appreciated welcomed improved improving
             recovered recovering immune protected vaccinated cured healed painless
             affordable free fair just lawful legitimate transparent
             accountable responsible mature patient tolerant humble modest polite
             courteous respectful gracious hospitable neighborly"""),
    (0.4, """okay alright adequate acceptable reasonable sensible practical convenient
             handy tidy neat clear smooth easy effortless simple quick speedy prompt
             punctual steady consistent thorough careful attentive curious interested
             interesting notable noteworthy hearty wholesome nutritious tasty delicious
             yummy mild quiet restful soothing calming"""),
    (-0.3, "tired exhausted weary sleepy drowsy bored restless distracted hesitant reluctant unsure"),
    (-0.4, """slow late tardy costly expensive overpriced weird strange odd awkward
              embarrassing embarrassed uncomfortable inconvenient confusing confused
              unclear vague wrong mistaken false incorrect inaccurate outdated obsolete
              clumsy sloppy careless lazy idle stubborn naive gullible petty trivial
              pointless useless worthless meaningless aimless"""),
    (-0.5, """annoyed annoying irritated irritating aggravating bothersome tiresome
              tedious boring dull bland stale disappointing disappointed unfortunate
              unlucky poor inferior faulty defective broken damaged flawed inadequate
              insufficient unacceptable unreliable unstable unsafe risky uncertain
              doubtful skeptical sceptical suspicious questionable controversial
              problematic difficult hard tough harsh rough messy dirty filthy polluted
              contaminated crowded noisy chaotic disorganized unfair unjust biased
              dismissive arrogant rude selfish greedy jealous envious bitter cynical
              moody grumpy cranky gloomy bleak dreary dismal"""),
    (-0.6, """sad unhappy sorrowful mournful tearful depressing dark worried anxious
              nervous afraid fearful frightened panicked panicky stressed stressful
              distressed upset disturbed troubled troubling concerned uneasy scared
              shaken sick ill unwell nauseous dizzy feverish infected contagious weak
              feeble fragile frail vulnerable helpless powerless desperate lonely
              isolated abandoned rejected betrayed cheated deceived exploited oppressed
              humiliated ashamed guilty regretful remorseful heartsick
              homesick grieving mourning aching sore painful hurtful stricken"""),
    (-0.7, """bad nasty ugly harmful damaging destructive agonizing distressing alarming
              frightening terrifying scary horrifying shocking outrageous scandalous
              disgraceful shameful shameless corrupt dishonest fraudulent fake deceptive
              misleading deceitful angry furious enraged livid hostile violent
              aggressive abusive threatening menacing heartbroken heartbreaking
              devastated depressed hopeless miserable wretched pathetic
              pitiful tragic grievous dying"""),
    (-0.8, """disgusting revolting repulsive hideous gruesome grim dire severe toxic
              poisonous venomous dangerous hazardous lethal unbearable intolerable
              excruciating unforgivable inexcusable reckless ruthless merciless
              heartless cruel brutal savage vicious barbaric inhumane
              malicious hateful despicable contemptible loathsome vile"""),
    (-0.9, "terrible awful horrible devastating deadly fatal evil wicked monstrous heinous sinister diabolical nightmarish"),
    (-1.0, "horrific horrendous atrocious abysmal appalling catastrophic disastrous dreadful"),
]

VERB_BLOCKS = [
    (0.8, "love adore cherish treasure"),
    (0.7, "enjoy celebrate praise admire applaud congratulate delight rejoice marvel"),
    (0.6, """thank appreciate welcome support encourage inspire uplift comfort reassure
             recommend endorse trust respect honor honour help heal cure recover improve
             succeed win achieve accomplish flourish thrive prosper benefit protect
             save rescue empower strengthen revive restore rebuild reunite"""),
    (0.5, """like smile laugh giggle hug embrace care share give donate volunteer assist
             aid guide mentor teach learn grow build create contribute cooperate
             collaborate unite agree approve accept forgive hope wish
             cheer toast salute greet invite reward gift compliment"""),
    (0.4, """relax rest soothe please satisfy amuse entertain refresh renew brighten
             ease calm settle smooth simplify clarify tidy organize
             fix mend repair solve resolve"""),
    (-0.4, """annoy irritate frustrate aggravate bother pester nag disturb disrupt
              interrupt confuse mislead disappoint discourage dishearten bore tire
              fatigue inconvenience delay stall postpone cancel"""),
    (-0.5, """complain whine grumble protest oppose resist argue bicker quarrel disagree
              doubt distrust suspect hesitate struggle stumble falter slip trip ban
              block restrict forbid prohibit fine punish penalize suspend withdraw quit
              resign shrink shiver tremble sigh groan moan frown scowl sulk"""),
    (-0.6, """fear dread panic worry cry sob weep mourn grieve regret despair collapse
              fail lose crash decline deteriorate worsen sicken blame accuse condemn
              denounce criticize insult mock ridicule taunt humiliate shame disgrace
              bully harass intimidate exclude discriminate oppress exploit neglect
              abandon desert reject refuse deny ignore dismiss silence censor starve
              suffocate choke faint"""),
    (-0.7, """hate despise loathe detest resent hurt harm injure wound damage ruin wreck
              shatter betray deceive cheat defraud scam swindle steal rob loot smuggle
              lie slander defame threaten menace stalk trap ambush sabotage vandalize
              pollute contaminate infect"""),
    (-0.8, "die suffer torture abuse assault attack terrorize traumatize strangle kidnap enslave"),
    (-0.9, "kill murder slaughter massacre destroy devastate annihilate obliterate exterminate"),
]

NOUN_BLOCKS = [
    (0.8, "miracle triumph masterpiece jubilation euphoria"),
    (0.7, "joy happiness delight bliss paradise love affection devotion adoration"),
    (0.6, """success victory achievement accomplishment progress breakthrough milestone
             recovery healing hope optimism courage bravery valor kindness generosity
             compassion empathy sympathy gratitude blessing honor glory pride
             celebration cheer comfort relief freedom liberty peace harmony friendship
             fellowship loyalty trust honesty integrity dignity wisdom talent genius
             strength health safety security stability prosperity fortune luck
             opportunity promise remedy immunity protection"""),
    (0.5, """benefit advantage gain reward prize gift bonus praise applause ovation
             smile laughter fun pleasure enjoyment satisfaction confidence
             encouragement inspiration motivation energy vitality warmth hero champion
             winner savior friend ally supporter helper volunteer donor guardian
             caregiver healer"""),
    (-0.4, "annoyance nuisance inconvenience discomfort boredom fatigue hassle fuss clutter queue backlog"),
    (-0.5, """problem trouble obstacle barrier setback delay shortage deficit debt burden
              strain complaint protest dispute argument quarrel feud doubt suspicion
              distrust blame fault error mistake blunder flaw defect damage harm injury
              wound bruise illness sickness ailment symptom fever risk
              uncertainty confusion rumor rumour gossip"""),
    (-0.6, """failure loss defeat collapse crash decline recession unemployment poverty
              hunger famine homelessness war conflict violence riot unrest chaos
              anarchy corruption fraud scam hoax scandal crime theft robbery burglary
              abuse harassment discrimination racism injustice inequality lie deception
              betrayal treachery greed hatred prejudice outbreak epidemic pandemic
              infection virus quarantine lockdown curfew"""),
    (-0.7, """pain agony misery suffering grief sorrow despair anguish torment trauma
              horror fear panic dread anxiety depression stress distress shock outrage
              fury rage wrath menace peril hazard venom plague curse nightmare"""),
    (-0.8, "death disease cancer tumor poison toxin assassin murderer killer terrorist tyrant dictator"),
    (-0.9, "catastrophe disaster tragedy calamity massacre genocide terror terrorism atrocity carnage"),
]

# uninflectable or already-inflected forms, emitted verbatim
FIXED_BLOCKS = [
    (0.9, "best"),
    (0.8, "yay hooray woohoo"),
    (0.7, "bravo congrats congratulations"),
    (0.6, "won cheers"),
    (0.5, "better phew"),
    (0.3, "lol haha hahaha lmao rofl hehe"),
    (-0.2, "nope meh"),
    (-0.3, "hmph"),
    (-0.4, "alas boo smh oops"),
    (-0.5, "ugh argh damn hell lost broke stole fought wept"),
    (-0.6, "yuck eww dammit crap wtf ffs stolen"),
    (-0.7, "shit broken beaten worse"),
    (-0.9, "worst"),
]

# adjectives whose un- form is a real word; polarity flips
UN_FLIP = """happy healthy fair just kind safe stable reliable comfortable pleasant
             friendly grateful helpful lucky fortunate popular welcome certain clear
             clean easy common natural usual likely willing able acceptable ethical
             lawful professional realistic reasonable responsible satisfying selfish
             steady successful sympathetic trained trustworthy wise""".split()

# verbs that double the final consonant before -ed / -ing
DOUBLE_FINAL = {
    "stop", "plan", "grab", "hug", "chat", "drop", "shop", "slip", "trip",
    "rob", "sob", "jog", "beg", "nod", "pat", "rub", "shrug", "snap", "stun",
    "trap", "wrap", "quit", "regret", "admit", "commit", "permit", "prefer",
    "refer", "occur", "submit", "ban", "scam", "kidnap", "sin",
}

# nouns ending in -o that pluralize with -es
O_PLURAL_ES = {"hero", "echo", "tomato", "potato", "motto"}

# -ed adjectives generally take no -ness noun; these are the exceptions
ED_NESS_OK = {"wicked", "wretched"}

# verbs whose simple past is irregular; the past is emitted as given and
# the regular -ed form is suppressed
IRREGULAR_PAST = {
    "win": "won",
    "lose": "lost",
    "break": "broke",
    "steal": "stole",
    "fight": "fought",
    "weep": "wept",
    "grow": "grew",
    "give": "gave",
    "teach": "taught",
    "learn": "learnt",
    "build": "built",
    "hurt": "hurt",
    "quit": "quit",
    "die": "died",
    "flee": "fled",
}

# adjectives that take no natural -ly adverb
NO_LY = {
    "afraid", "alright", "okay", "broken", "fun", "ill", "well", "unwell",
    "tired", "thrilled", "pleased", "satisfied", "excited", "devoted",
    "blessed", "beloved", "overjoyed", "elated", "encouraged",
    "reassured", "relaxed", "content", "smiling", "grinning", "laughing",
    "improved", "improving", "recovered", "recovering", "vaccinated",
    "cured", "healed", "protected", "infected", "confused",
    "embarrassed", "worried", "panicked", "stressed", "distressed", "upset",
    "disturbed", "troubled", "concerned", "scared", "shaken", "frightened",
    "isolated", "abandoned", "rejected", "betrayed", "cheated", "deceived",
    "exploited", "oppressed", "humiliated", "ashamed", "grieving",
    "mourning", "aching", "sore", "stricken", "heartbroken", "devastated",
    "depressed", "enraged", "livid", "dying", "disappointed", "annoyed",
    "irritated", "interested", "motivated", "inspired", "admired",
    "respected", "trusted", "appreciated", "welcomed", "welcoming",
    "mistaken", "outdated", "obsolete", "damaged", "crowded", "polluted",
    "contaminated", "disorganized", "trained",
}

# adjectives that take no natural -ness noun
NO_NESS = {
    "okay", "alright", "fun", "favorable", "favourable", "beneficial",
    "triumphant", "heroic", "victorious", "successful", "prosperous",
    "flourishing", "thriving", "magical", "festive", "improving",
    "improved", "recovering", "recovered", "vaccinated", "cured", "healed",
    "protected", "immune", "infected", "contagious", "feverish", "dying",
    "excruciating", "agonizing", "smiling", "grinning", "laughing",
    "memorable", "entertaining", "amusing", "humorous", "notable",
    "noteworthy", "nutritious", "controversial", "problematic",
    "catastrophic", "diabolical", "nightmarish", "barbaric", "inhumane",
    "scandalous", "horrendous", "atrocious", "abysmal", "horrific",
}


def adverb_of(adj: str) -> str | None:
    if adj in NO_LY or adj.endswith("ly"):
        return None
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("le") and len(adj) > 3 and adj[-3] not in VOWELS:
        return adj[:-1] + "y"
    if adj.endswith("y") and adj[-2] not in VOWELS:
        return adj[:-1] + "ily"
    if adj.endswith("ll"):
        return adj + "y"
    return adj + "ly"


def ness_of(adj: str) -> str | None:
    if adj in NO_NESS or adj.endswith("ness"):
        return None
    if adj.endswith("ed") and adj not in ED_NESS_OK:
        return None
    if adj.endswith("y") and adj[-2] not in VOWELS:
        return adj[:-1] + "iness"
    return adj + "ness"


def plural_of(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun in O_PLURAL_ES:
        return noun + "es"
    return noun + "s"


def past_of(verb: str) -> str:
    if verb in IRREGULAR_PAST:
        return IRREGULAR_PAST[verb]
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2] not in VOWELS:
        return verb[:-1] + "ied"
    if verb.endswith("c"):
        return verb + "ked"
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ed"
    return verb + "ed"


def gerund_of(verb: str) -> str:
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        return verb[:-1] + "ing"
    if verb.endswith("c"):
        return verb + "king"
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ing"
    return verb + "ing"


def build() -> dict[str, float]:
    entries: dict[str, float] = {}

    def add(word: str, polarity: float) -> None:
        word = word.strip()
        if not word:
            return
        if not WORD_RE.match(word):
            raise SystemExit(f"generated non-word {word!r}")
        # on collision keep the stronger value so specific beats generic
        if word not in entries or abs(polarity) > abs(entries[word]):
            entries[word] = round(polarity, 2)

    for polarity, block in ADJ_BLOCKS:
        for adj in block.split():
            add(adj, polarity)
            adverb = adverb_of(adj)
            if adverb:
                add(adverb, polarity)
            quality = ness_of(adj)
            if quality:
                add(quality, polarity)
            if adj in UN_FLIP:
                add("un" + adj, -polarity)
                un_adv = adverb_of(adj)
                if un_adv:
                    add("un" + un_adv, -polarity)

    for polarity, block in VERB_BLOCKS:
        for verb in block.split():
            add(verb, polarity)
            add(plural_of(verb), polarity)  # third person singular
            add(past_of(verb), polarity)
            add(gerund_of(verb), polarity)

    for polarity, block in NOUN_BLOCKS:
        for noun in block.split():
            add(noun, polarity)
            add(plural_of(noun), polarity)

    for polarity, block in FIXED_BLOCKS:
        for word in block.split():
            add(word, polarity)

    return entries


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "-o",
        "--output",
        default="src/vaxsent/data/polarity_lexicon.csv",
        help="output CSV path",
    )
    args = parser.parse_args(argv)
    entries = build()
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["word", "polarity"])
        for word in sorted(entries):
            writer.writerow([word, f"{entries[word]:.2f}"])
    print(f"wrote {len(entries)} entries to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
