#include "caudit/cleaner/langid_seeds.hpp"

// Seed prose for the bundled trigram language model. Plain descriptive text,
// a few paragraphs per language; the model counts character trigrams of the
// lowercased letters-and-spaces projection of this text.

namespace caudit::cleaner {

const char* kSeedEnglish = R"(The morning train leaves the station at half past seven and arrives in the city just before nine. Most passengers read the newspaper or look out of the window at the fields and small towns along the way. In winter the carriages are warm and the glass clouds over, so children draw little pictures on the windows with their fingers.
Bread has been baked in this valley for hundreds of years. The mill by the river still grinds wheat between heavy stones, and the baker lights the oven before dawn so that the first loaves are ready when the shop opens. People say the secret is nothing more than good flour, salt, water, and patience.
A public library is one of the quietest places in any town. Students spread their notes across the long tables, and an old man in the corner works through the crossword with a pencil. The librarian knows most visitors by name and keeps the returned books on a wooden cart until the afternoon.
The weather along the coast changes quickly in spring. A clear sky can fill with low cloud within the hour, and fishermen watch the wind before they decide whether to take the boats out. When the storm finally breaks, the rain drums on the roofs and the gutters run full into the harbour.
Every year the village holds a small festival at the end of the harvest. There are stalls with cheese and apples, a band plays in the square, and the children race sacks across the green. By evening the lanterns are lit and the older people sit on benches telling the same stories they told the year before.
Scientists who study rivers measure the depth and speed of the water at many points along the channel. Over time these records show how the river moves its bed, carries sand downstream, and floods the low meadows after heavy rain. Such measurements help the towns downstream plan their bridges and defences.)";

const char* kSeedGerman = R"(Der Morgenzug verlässt den Bahnhof um halb acht und erreicht die Stadt kurz vor neun. Die meisten Fahrgäste lesen die Zeitung oder schauen aus dem Fenster auf die Felder und kleinen Dörfer am Weg. Im Winter sind die Wagen warm, und die Scheiben beschlagen, sodass die Kinder mit den Fingern kleine Bilder auf das Glas malen.
In diesem Tal wird seit Hunderten von Jahren Brot gebacken. Die Mühle am Fluss mahlt den Weizen noch zwischen schweren Steinen, und der Bäcker heizt den Ofen vor der Morgendämmerung, damit die ersten Laibe fertig sind, wenn der Laden öffnet. Die Leute sagen, das Geheimnis sei nichts weiter als gutes Mehl, Salz, Wasser und Geduld.
Eine öffentliche Bücherei gehört zu den stillsten Orten jeder Stadt. Die Studenten breiten ihre Hefte über die langen Tische aus, und ein alter Mann in der Ecke löst mit dem Bleistift das Kreuzworträtsel. Die Bibliothekarin kennt die meisten Besucher beim Namen und lässt die zurückgegebenen Bücher bis zum Nachmittag auf einem Holzwagen stehen.
Das Wetter an der Küste ändert sich im Frühjahr schnell. Ein klarer Himmel kann sich innerhalb einer Stunde mit tiefen Wolken füllen, und die Fischer beobachten den Wind, bevor sie entscheiden, ob die Boote auslaufen. Wenn das Gewitter endlich losbricht, trommelt der Regen auf die Dächer, und die Rinnen laufen voll in den Hafen.
Jedes Jahr feiert das Dorf am Ende der Ernte ein kleines Fest. Es gibt Stände mit Käse und Äpfeln, eine Kapelle spielt auf dem Platz, und die Kinder laufen Sackrennen über die Wiese. Am Abend werden die Laternen angezündet, und die älteren Leute sitzen auf den Bänken und erzählen dieselben Geschichten wie im Jahr zuvor.
Wissenschaftler, die Flüsse untersuchen, messen die Tiefe und die Geschwindigkeit des Wassers an vielen Stellen des Laufes. Mit der Zeit zeigen diese Aufzeichnungen, wie der Fluss sein Bett verlagert, Sand stromabwärts trägt und nach starkem Regen die niedrigen Wiesen überschwemmt.)";

const char* kSeedFrench = R"(Le train du matin quitte la gare à sept heures et demie et arrive en ville un peu avant neuf heures. La plupart des voyageurs lisent le journal ou regardent par la fenêtre les champs et les petits villages le long du chemin. En hiver, les wagons sont chauds et les vitres se couvrent de buée, alors les enfants dessinent de petites images sur le verre avec leurs doigts.
On cuit du pain dans cette vallée depuis des centaines d'années. Le moulin au bord de la rivière écrase encore le blé entre de lourdes pierres, et le boulanger allume le four avant l'aube pour que les premières miches soient prêtes à l'ouverture de la boutique. Les gens disent que le secret n'est rien d'autre que de la bonne farine, du sel, de l'eau et de la patience.
Une bibliothèque publique est l'un des endroits les plus calmes de toute ville. Les étudiants étalent leurs notes sur les longues tables, et un vieil homme dans le coin remplit les mots croisés au crayon. La bibliothécaire connaît la plupart des visiteurs par leur nom et garde les livres rendus sur un chariot de bois jusqu'à l'après-midi.
Le temps change vite au printemps le long de la côte. Un ciel clair peut se couvrir de nuages bas en moins d'une heure, et les pêcheurs observent le vent avant de décider de sortir les bateaux. Quand l'orage éclate enfin, la pluie tambourine sur les toits et les gouttières se déversent dans le port.
Chaque année, le village organise une petite fête à la fin des récoltes. Il y a des étals de fromage et de pommes, une fanfare joue sur la place, et les enfants font la course en sac à travers le pré. Le soir venu, on allume les lanternes et les anciens s'assoient sur les bancs pour raconter les mêmes histoires que l'année précédente.
Les scientifiques qui étudient les rivières mesurent la profondeur et la vitesse de l'eau en de nombreux points du cours. Avec le temps, ces relevés montrent comment la rivière déplace son lit, transporte le sable vers l'aval et inonde les prés bas après de fortes pluies.)";

const char* kSeedSpanish = R"(El tren de la mañana sale de la estación a las siete y media y llega a la ciudad poco antes de las nueve. La mayoría de los pasajeros lee el periódico o mira por la ventana los campos y los pueblos pequeños del camino. En invierno los vagones están calientes y los cristales se empañan, así que los niños dibujan figuritas en el vidrio con los dedos.
En este valle se hornea pan desde hace cientos de años. El molino junto al río todavía muele el trigo entre piedras pesadas, y el panadero enciende el horno antes del amanecer para que las primeras hogazas estén listas cuando abre la tienda. La gente dice que el secreto no es más que buena harina, sal, agua y paciencia.
Una biblioteca pública es uno de los lugares más tranquilos de cualquier ciudad. Los estudiantes extienden sus apuntes sobre las mesas largas, y un hombre mayor en el rincón resuelve el crucigrama con lápiz. La bibliotecaria conoce a la mayoría de los visitantes por su nombre y deja los libros devueltos en un carrito de madera hasta la tarde.
El tiempo en la costa cambia rápido en primavera. Un cielo despejado puede llenarse de nubes bajas en menos de una hora, y los pescadores observan el viento antes de decidir si sacan los botes. Cuando por fin estalla la tormenta, la lluvia golpea los tejados y los canalones se vacían llenos en el puerto.
Cada año el pueblo celebra una pequeña fiesta al final de la cosecha. Hay puestos de queso y manzanas, una banda toca en la plaza, y los niños corren carreras de sacos por el prado. Al anochecer se encienden los faroles y los mayores se sientan en los bancos a contar las mismas historias del año anterior.
Los científicos que estudian los ríos miden la profundidad y la velocidad del agua en muchos puntos del cauce. Con el tiempo, estos registros muestran cómo el río mueve su lecho, arrastra arena aguas abajo e inunda las vegas bajas después de lluvias fuertes.)";

const char* kSeedRussian = R"(Утренний поезд отходит от станции в половине восьмого и прибывает в город около девяти. Большинство пассажиров читает газету или смотрит в окно на поля и маленькие посёлки вдоль дороги. Зимой вагоны тёплые, стёкла запотевают, и дети рисуют пальцами на окнах маленькие картинки.
В этой долине пекут хлеб уже сотни лет. Мельница у реки по-прежнему мелет пшеницу тяжёлыми камнями, а пекарь растапливает печь до рассвета, чтобы первые буханки были готовы к открытию лавки. Люди говорят, что весь секрет состоит из хорошей муки, соли, воды и терпения.
Публичная библиотека остаётся одним из самых тихих мест любого города. Студенты раскладывают свои тетради по длинным столам, а старик в углу решает кроссворд карандашом. Библиотекарь знает большинство посетителей по именам и оставляет возвращённые книги на деревянной тележке до самого вечера.
Погода на побережье весной меняется быстро. Ясное небо за час может затянуться низкими облаками, и рыбаки следят за ветром, прежде чем решить, выходить ли в море. Когда гроза наконец начинается, дождь стучит по крышам, и водостоки переполняются прямо в гавань.
Каждый год в конце уборки урожая деревня устраивает небольшой праздник. На площади играют музыканты, стоят прилавки с сыром и яблоками, а дети бегают наперегонки в мешках по лугу. К вечеру зажигают фонари, и старики сидят на скамейках, рассказывая те же истории, что и год назад.
Учёные, изучающие реки, измеряют глубину и скорость воды во многих точках русла. Со временем эти записи показывают, как река меняет своё дно, несёт песок вниз по течению и затапливает низкие луга после сильных дождей.)";

std::vector<std::pair<std::string, std::string>> bundled_langid_seeds() {
    return {
        {"en", kSeedEnglish}, {"de", kSeedGerman},  {"fr", kSeedFrench},
        {"es", kSeedSpanish}, {"ru", kSeedRussian},
    };
}

}  // namespace caudit::cleaner
